#include "nominal/fun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nominal {

std::vector<AtomVec> subsets_of(const AtomVec& s) {
    std::vector<AtomVec> out;
    const auto& items = s.items();
    out.reserve(std::size_t{1} << items.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
        std::vector<Atom> sub;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(items[i]);
        out.push_back(AtomVec(std::move(sub)));
    }
    return out;
}

std::vector<AtomSet> atom_sets_supported_by(const AtomVec& s) {
    std::vector<AtomSet> out;
    for (const AtomVec& sub : subsets_of(s)) out.push_back(AtomSet::finite(sub));
    for (const AtomVec& sub : subsets_of(s)) out.push_back(AtomSet::cofinite(sub));
    return out;
}

// ---------------------------------------------------------------- AtomFun

AtomFun AtomFun::constant(Atom c) {
    AtomFun f;
    f.carrier_ = AtomVec{c};
    f.table_[c] = c;
    f.tail_ = Tail::Const;
    f.const_atom_ = c;
    return f;
}

AtomFun AtomFun::from_perm(const Perm& p) {
    AtomFun f;
    f.carrier_ = p.moved();
    f.table_ = p.moves();
    f.tail_ = Tail::Identity;
    return f;
}

AtomFun AtomFun::make(const AtomVec& carrier, const std::map<Atom, Atom>& table, Tail tail,
                      std::optional<Atom> const_atom) {
    AtomFun f;
    f.carrier_ = carrier;
    f.tail_ = tail;
    if (tail == Tail::Const) {
        if (!const_atom) throw std::invalid_argument("const tail needs an atom");
        if (!carrier.contains(*const_atom))
            throw std::invalid_argument("const atom outside the carrier");
        f.const_atom_ = *const_atom;
    }
    for (Atom a : carrier) {
        auto it = table.find(a);
        if (it == table.end()) throw std::invalid_argument("table not total on the carrier");
        if (!carrier.contains(it->second))
            throw std::invalid_argument("table value outside the carrier");
        f.table_[a] = it->second;
    }
    if (table.size() != carrier.size())
        throw std::invalid_argument("table mentions atoms outside the carrier");
    return f;
}

Atom AtomFun::operator()(Atom a) const {
    auto it = table_.find(a);
    if (it != table_.end()) return it->second;
    return tail_ == Tail::Identity ? a : const_atom_;
}

AtomFun AtomFun::normalized() const {
    // An atom s stays in the carrier iff its entry deviates from the tail,
    // or it is the value of a deviating entry, or it is the const atom.
    // Dropping anything else leaves the denotation unchanged and keeps all
    // table values inside the carrier.
    AtomVec keep;
    if (tail_ == Tail::Const) keep.insert(const_atom_);
    for (const auto& [s, v] : table_) {
        Atom tail_value = tail_ == Tail::Identity ? s : const_atom_;
        if (v != tail_value) {
            keep.insert(s);
            keep.insert(v);
        }
    }
    AtomFun f;
    f.carrier_ = keep;
    f.tail_ = tail_;
    f.const_atom_ = tail_ == Tail::Const ? const_atom_ : Atom{};
    for (Atom a : keep) f.table_[a] = (*this)(a);
    return f;
}

AtomFun::Key AtomFun::key() const {
    std::vector<std::pair<Atom, Atom>> entries(table_.begin(), table_.end());
    return {tail_, tail_ == Tail::Const ? const_atom_ : Atom{}, carrier_, std::move(entries)};
}

std::string AtomFun::to_string() const {
    std::string s = "fun{";
    bool first = true;
    for (const auto& [a, v] : table_) {
        if (!first) s += ", ";
        first = false;
        s += atom_name(a) + "->" + atom_name(v);
    }
    s += "; tail=";
    s += tail_ == Tail::Identity ? "id" : "const " + atom_name(const_atom_);
    s += "}";
    return s;
}

AtomFun compose_funs(const AtomFun& f, const AtomFun& g) {
    AtomVec carrier = f.carrier() | g.carrier();
    std::map<Atom, Atom> table;
    for (Atom a : carrier) table[a] = f(g(a));
    AtomFun::Tail tail;
    std::optional<Atom> cnst;
    if (g.tail() == AtomFun::Tail::Identity && f.tail() == AtomFun::Tail::Identity) {
        tail = AtomFun::Tail::Identity;
    } else if (g.tail() == AtomFun::Tail::Identity) {
        tail = AtomFun::Tail::Const;
        cnst = f.const_atom();
    } else {
        // outside the union both behave uniformly: g gives its const, then f
        tail = AtomFun::Tail::Const;
        cnst = f(g.const_atom());
    }
    return AtomFun::make(carrier, table, tail, cnst).normalized();
}

AtomFun conjugate(const Perm& p, const AtomFun& f) {
    AtomVec carrier = act_vec(p, f.carrier());
    std::map<Atom, Atom> table;
    for (const auto& [a, v] : f.table()) table[p(a)] = p(v);
    std::optional<Atom> cnst;
    if (f.tail() == AtomFun::Tail::Const) cnst = p(f.const_atom());
    return AtomFun::make(carrier, table, f.tail(), cnst);
}

bool is_injective(const AtomFun& f) {
    AtomFun n = f.normalized();
    if (n.tail() == AtomFun::Tail::Const) return false;  // everything outside collides
    std::set<Atom> values;
    for (const auto& [a, v] : n.table())
        if (!values.insert(v).second) return false;
    return true;
}

bool is_surjective(const AtomFun& f) {
    AtomFun n = f.normalized();
    if (n.tail() == AtomFun::Tail::Const) return false;  // image misses A minus the carrier
    // identity tail: atoms outside the carrier are hit by themselves, so
    // surjectivity is the table covering the carrier
    std::set<Atom> values;
    for (const auto& [a, v] : n.table()) values.insert(v);
    for (Atom a : n.carrier())
        if (!values.count(a)) return false;
    return true;
}

std::vector<AtomFun> enumerate_atom_funs(const AtomVec& s) {
    std::vector<AtomFun> out;
    if (s.empty()) {
        out.push_back(AtomFun::identity());
        return out;
    }
    const auto& atoms = s.items();
    std::vector<std::pair<AtomFun::Tail, std::optional<Atom>>> tails;
    tails.emplace_back(AtomFun::Tail::Identity, std::nullopt);
    for (Atom c : atoms) tails.emplace_back(AtomFun::Tail::Const, c);

    std::vector<std::size_t> choice(atoms.size(), 0);  // value index per carrier atom
    while (true) {
        std::map<Atom, Atom> table;
        for (std::size_t i = 0; i < atoms.size(); ++i) table[atoms[i]] = atoms[choice[i]];
        for (const auto& [tail, cnst] : tails)
            out.push_back(AtomFun::make(s, table, tail, cnst).normalized());
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < atoms.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ------------------------------------------------------------- AtomSetFun

AtomSetFun AtomSetFun::make(const AtomVec& carrier, const std::map<Atom, AtomSet>& table,
                            Tail tail, const AtomVec& tail_part) {
    AtomSetFun f;
    f.carrier_ = carrier;
    f.tail_ = tail;
    f.tail_part_ = tail_part;
    if (!tail_part.subset_of(carrier))
        throw std::invalid_argument("tail part outside the carrier");
    for (Atom a : carrier) {
        auto it = table.find(a);
        if (it == table.end()) throw std::invalid_argument("table not total on the carrier");
        if (!supp_set(it->second).subset_of(carrier))
            throw std::invalid_argument("table value not supported by the carrier");
        f.table_.emplace(a, it->second);
    }
    if (table.size() != carrier.size())
        throw std::invalid_argument("table mentions atoms outside the carrier");
    return f;
}

AtomSet AtomSetFun::tail_value_at(Atom a) const {
    AtomVec with_self = tail_part_;
    with_self.insert(a);
    switch (tail_) {
        case Tail::FinWithSelf: return AtomSet::finite(with_self);
        case Tail::FinConst: return AtomSet::finite(tail_part_);
        case Tail::CofinWithoutSelf: return AtomSet::cofinite(with_self);
        case Tail::CofinConst: return AtomSet::cofinite(tail_part_);
    }
    return AtomSet::finite({});
}

AtomSet AtomSetFun::operator()(Atom a) const {
    auto it = table_.find(a);
    if (it != table_.end()) return it->second;
    return tail_value_at(a);
}

AtomSetFun AtomSetFun::normalized() const {
    AtomVec keep = tail_part_;
    for (const auto& [s, v] : table_) {
        if (v != tail_value_at(s)) {
            keep.insert(s);
            keep |= supp_set(v);
        }
    }
    std::map<Atom, AtomSet> table;
    for (Atom a : keep) table.emplace(a, (*this)(a));
    return make(keep, table, tail_, tail_part_);
}

AtomSetFun::Key AtomSetFun::key() const {
    std::vector<std::pair<Atom, AtomSet>> entries(table_.begin(), table_.end());
    return {tail_, tail_part_, carrier_, std::move(entries)};
}

std::string AtomSetFun::to_string() const {
    std::string s = "fun{";
    bool first = true;
    for (const auto& [a, v] : table_) {
        if (!first) s += ", ";
        first = false;
        s += atom_name(a) + "->" + v.to_string();
    }
    s += "; tail=";
    switch (tail_) {
        case Tail::FinWithSelf: s += "self+" + tail_part_.to_string(); break;
        case Tail::FinConst: s += "const" + tail_part_.to_string(); break;
        case Tail::CofinWithoutSelf: s += "cofin-self+" + tail_part_.to_string(); break;
        case Tail::CofinConst: s += "cofin" + tail_part_.to_string(); break;
    }
    s += "}";
    return s;
}

AtomSetFun conjugate(const Perm& p, const AtomSetFun& f) {
    std::map<Atom, AtomSet> table;
    for (const auto& [a, v] : f.table()) table.emplace(p(a), act_set(p, v));
    return AtomSetFun::make(act_vec(p, f.carrier()), table, f.tail(), act_vec(p, f.tail_part()));
}

std::vector<AtomSetFun> enumerate_set_funs(const AtomVec& s) {
    std::vector<AtomSetFun> out;
    std::vector<AtomSet> values = atom_sets_supported_by(s);
    std::vector<AtomVec> parts = subsets_of(s);
    const auto& atoms = s.items();

    std::vector<std::size_t> choice(atoms.size(), 0);
    while (true) {
        std::map<Atom, AtomSet> table;
        for (std::size_t i = 0; i < atoms.size(); ++i) table.emplace(atoms[i], values[choice[i]]);
        for (auto tail : {AtomSetFun::Tail::FinWithSelf, AtomSetFun::Tail::FinConst,
                          AtomSetFun::Tail::CofinWithoutSelf, AtomSetFun::Tail::CofinConst}) {
            for (const AtomVec& part : parts)
                out.push_back(AtomSetFun::make(s, table, tail, part).normalized());
        }
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < values.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --------------------------------------------------------------- TupleFun

TupleFun TupleFun::make(const AtomVec& carrier, std::size_t arity,
                        const std::map<Atom, std::vector<Atom>>& table, const Pattern& pattern) {
    if (arity == 0) throw std::invalid_argument("arity must be at least 1");
    if (pattern.size() != arity) throw std::invalid_argument("pattern length differs from arity");
    TupleFun f;
    f.carrier_ = carrier;
    f.arity_ = arity;
    f.pattern_ = pattern;
    for (const auto& entry : pattern)
        if (entry && !carrier.contains(*entry))
            throw std::invalid_argument("pattern atom outside the carrier");
    for (Atom a : carrier) {
        auto it = table.find(a);
        if (it == table.end()) throw std::invalid_argument("table not total on the carrier");
        if (it->second.size() != arity) throw std::invalid_argument("row length differs from arity");
        for (Atom v : it->second)
            if (!carrier.contains(v)) throw std::invalid_argument("row value outside the carrier");
        f.table_[a] = it->second;
    }
    if (table.size() != carrier.size())
        throw std::invalid_argument("table mentions atoms outside the carrier");
    return f;
}

std::vector<Atom> TupleFun::operator()(Atom a) const {
    auto it = table_.find(a);
    if (it != table_.end()) return it->second;
    std::vector<Atom> row;
    row.reserve(arity_);
    for (const auto& entry : pattern_) row.push_back(entry ? *entry : a);
    return row;
}

std::vector<AtomFun> TupleFun::components() const {
    std::vector<AtomFun> out;
    for (std::size_t i = 0; i < arity_; ++i) {
        std::map<Atom, Atom> table;
        for (const auto& [a, row] : table_) table[a] = row[i];
        if (pattern_[i])
            out.push_back(AtomFun::make(carrier_, table, AtomFun::Tail::Const, *pattern_[i]));
        else
            out.push_back(AtomFun::make(carrier_, table, AtomFun::Tail::Identity));
    }
    return out;
}

bool TupleFun::injective_valued() const {
    auto distinct = [](const std::vector<Atom>& row) {
        std::set<Atom> seen(row.begin(), row.end());
        return seen.size() == row.size();
    };
    for (const auto& [a, row] : table_)
        if (!distinct(row)) return false;
    std::size_t selfs = 0;
    std::set<Atom> seen;
    for (const auto& entry : pattern_) {
        if (!entry) {
            ++selfs;
        } else if (!seen.insert(*entry).second) {
            return false;
        }
    }
    return selfs <= 1;
}

TupleFun TupleFun::normalized() const {
    // The least support of a tuple of functions is the union of the least
    // supports of its components.
    std::vector<AtomFun> comps;
    AtomVec keep;
    for (const AtomFun& c : components()) {
        AtomFun n = c.normalized();
        keep |= n.carrier();
        comps.push_back(std::move(n));
    }
    std::map<Atom, std::vector<Atom>> table;
    for (Atom a : keep) {
        std::vector<Atom> row;
        for (const AtomFun& c : comps) row.push_back(c(a));
        table[a] = std::move(row);
    }
    Pattern pattern;
    for (const AtomFun& c : comps) {
        if (c.tail() == AtomFun::Tail::Const)
            pattern.emplace_back(c.const_atom());
        else
            pattern.emplace_back(std::nullopt);
    }
    return make(keep, arity_, table, pattern);
}

TupleFun::Key TupleFun::key() const {
    std::vector<std::pair<Atom, std::vector<Atom>>> entries(table_.begin(), table_.end());
    return {arity_, carrier_, pattern_, std::move(entries)};
}

std::string TupleFun::to_string() const {
    auto row_text = [](const std::vector<Atom>& row) {
        std::string s = "(";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) s += ",";
            s += atom_name(row[i]);
        }
        return s + ")";
    };
    std::string s = "fun{";
    bool first = true;
    for (const auto& [a, row] : table_) {
        if (!first) s += ", ";
        first = false;
        s += atom_name(a) + "->" + row_text(row);
    }
    s += "; tail=(";
    for (std::size_t i = 0; i < pattern_.size(); ++i) {
        if (i) s += ",";
        s += pattern_[i] ? atom_name(*pattern_[i]) : std::string("self");
    }
    s += ")}";
    return s;
}

namespace {

std::vector<TupleFun> enumerate_tuple_funs_impl(const AtomVec& s, std::size_t n,
                                                bool injective_only) {
    if (n == 0) throw std::invalid_argument("arity must be at least 1");
    std::vector<TupleFun> out;
    const auto& atoms = s.items();

    // all rows over the carrier
    std::vector<std::vector<Atom>> rows;
    {
        std::vector<std::size_t> idx(n, 0);
        if (!atoms.empty()) {
            while (true) {
                std::vector<Atom> row;
                for (std::size_t i = 0; i < n; ++i) row.push_back(atoms[idx[i]]);
                rows.push_back(std::move(row));
                std::size_t i = 0;
                for (; i < n; ++i) {
                    if (++idx[i] < atoms.size()) break;
                    idx[i] = 0;
                }
                if (i == n) break;
            }
        }
    }
    // all tail patterns over carrier + SELF
    std::vector<TupleFun::Pattern> patterns;
    {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            TupleFun::Pattern pat;
            for (std::size_t i = 0; i < n; ++i) {
                if (idx[i] == atoms.size())
                    pat.emplace_back(std::nullopt);  // SELF
                else
                    pat.emplace_back(atoms[idx[i]]);
            }
            patterns.push_back(std::move(pat));
            std::size_t i = 0;
            for (; i < n; ++i) {
                if (++idx[i] <= atoms.size()) break;
                idx[i] = 0;
            }
            if (i == n) break;
        }
    }

    if (atoms.empty()) {
        for (const auto& pat : patterns) {
            TupleFun f = TupleFun::make(s, n, {}, pat);
            if (!injective_only || f.injective_valued()) out.push_back(f);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<std::size_t> choice(atoms.size(), 0);  // row index per carrier atom
    while (true) {
        std::map<Atom, std::vector<Atom>> table;
        for (std::size_t i = 0; i < atoms.size(); ++i) table[atoms[i]] = rows[choice[i]];
        for (const auto& pat : patterns) {
            TupleFun f = TupleFun::make(s, n, table, pat);
            if (injective_only && !f.injective_valued()) continue;
            out.push_back(f.normalized());
        }
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < rows.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<TupleFun> enumerate_tuple_funs(const AtomVec& s, std::size_t n) {
    return enumerate_tuple_funs_impl(s, n, false);
}

std::vector<TupleFun> enumerate_injective_tuple_funs(const AtomVec& s, std::size_t n) {
    return enumerate_tuple_funs_impl(s, n, true);
}

}  // namespace nominal
