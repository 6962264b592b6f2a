#include "nominal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nominal::oracle {

std::string model_elem_to_string(const ModelElem& e) {
    struct Visitor {
        std::string operator()(Atom a) const { return atom_name(a); }
        std::string operator()(const ModelSet& s) const { return s.elems.to_string(); }
        std::string operator()(const ModelTuple& t) const {
            std::string s = "(";
            for (std::size_t i = 0; i < t.items.size(); ++i) {
                if (i) s += ",";
                s += atom_name(t.items[i]);
            }
            return s + ")";
        }
        std::string operator()(const ModelFun& f) const {
            std::string s = "[";
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                if (i) s += ",";
                s += atom_name(f.values[i]);
            }
            return s + "]";
        }
        std::string operator()(const ModelSetFun& f) const {
            std::string s = "[";
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                if (i) s += ",";
                s += f.values[i].to_string();
            }
            return s + "]";
        }
        std::string operator()(const ModelTupleFun& f) const {
            std::string s = "[";
            for (std::size_t i = 0; i < f.values.size(); ++i) {
                if (i) s += ",";
                s += "(";
                for (std::size_t j = 0; j < f.values[i].size(); ++j) {
                    if (j) s += ",";
                    s += atom_name(f.values[i][j]);
                }
                s += ")";
            }
            return s + "]";
        }
    };
    return std::visit(Visitor{}, e);
}

FiniteModel::FiniteModel(AtomVec universe) : universe_(std::move(universe)) {
    if (universe_.size() < 2) throw std::invalid_argument("model universe needs at least 2 atoms");
}

FiniteModel FiniteModel::containing(const AtomVec& s, std::size_t n) {
    AtomVec universe = s;
    while (universe.size() < n) universe.insert(fresh_atom());
    return FiniteModel(universe);
}

std::size_t FiniteModel::index(Atom a) const {
    const auto& items = universe_.items();
    auto it = std::lower_bound(items.begin(), items.end(), a);
    if (it == items.end() || *it != a) throw std::invalid_argument("atom outside the universe");
    return static_cast<std::size_t>(it - items.begin());
}

std::vector<Perm> FiniteModel::fix_generators(const AtomVec& s) const {
    AtomVec free = universe_ - s;
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < free.size(); ++i)
        for (std::size_t j = i + 1; j < free.size(); ++j)
            gens.push_back(Perm::transpose(free.at(i), free.at(j)));
    return gens;
}

ModelElem act_elem(const FiniteModel& m, const Perm& p, const ModelElem& e) {
    Perm pinv = p.inverse();
    struct Visitor {
        const FiniteModel& m;
        const Perm& p;
        const Perm& pinv;
        ModelElem operator()(Atom a) const { return p(a); }
        ModelElem operator()(const ModelSet& s) const { return ModelSet{act_vec(p, s.elems)}; }
        ModelElem operator()(const ModelTuple& t) const {
            std::vector<Atom> items;
            items.reserve(t.items.size());
            for (Atom a : t.items) items.push_back(p(a));
            return ModelTuple{std::move(items)};
        }
        // (p . f)(x) = p(f(p^{-1}(x))), tabulated over the universe
        ModelElem operator()(const ModelFun& f) const {
            std::vector<Atom> values(f.values.size());
            for (std::size_t i = 0; i < values.size(); ++i)
                values[i] = p(f.values[m.index(pinv(m.universe().at(i)))]);
            return ModelFun{std::move(values)};
        }
        ModelElem operator()(const ModelSetFun& f) const {
            std::vector<AtomVec> values(f.values.size());
            for (std::size_t i = 0; i < values.size(); ++i)
                values[i] = act_vec(p, f.values[m.index(pinv(m.universe().at(i)))]);
            return ModelSetFun{std::move(values)};
        }
        ModelElem operator()(const ModelTupleFun& f) const {
            std::vector<std::vector<Atom>> values(f.values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                const auto& row = f.values[m.index(pinv(m.universe().at(i)))];
                std::vector<Atom> image;
                image.reserve(row.size());
                for (Atom a : row) image.push_back(p(a));
                values[i] = std::move(image);
            }
            return ModelTupleFun{std::move(values)};
        }
    };
    return std::visit(Visitor{m, p, pinv}, e);
}

bool check_support(const FiniteModel& m, const ModelElem& e, const AtomVec& s) {
    for (const Perm& g : m.fix_generators(s))
        if (!(act_elem(m, g, e) == e)) return false;
    return true;
}

namespace {

std::vector<AtomVec> all_subsets(const AtomVec& universe) { return subsets_of(universe); }

std::vector<std::vector<Atom>> all_tuples(const AtomVec& universe, std::size_t n,
                                          bool injective) {
    std::vector<std::vector<Atom>> out;
    std::vector<Atom> cur;
    std::function<void()> rec = [&]() {
        if (cur.size() == n) {
            out.push_back(cur);
            return;
        }
        for (Atom a : universe) {
            if (injective && std::find(cur.begin(), cur.end(), a) != cur.end()) continue;
            cur.push_back(a);
            rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

// Slot values that survive every swap of the free atoms other than `extra`:
// the consistency pre-filter for orbit-representative extension.
template <class Value, class ActValue>
std::vector<Value> filter_slot_values(const FiniteModel& m, const std::vector<Value>& candidates,
                                      const AtomVec& s, std::optional<Atom> extra,
                                      ActValue act_value) {
    AtomVec fixed = s;
    if (extra) fixed.insert(*extra);
    std::vector<Perm> gens = m.fix_generators(fixed);
    std::vector<Value> out;
    for (const Value& v : candidates) {
        bool ok = true;
        for (const Perm& g : gens)
            if (!(act_value(g, v) == v)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

// Generic orbit-representative extension for function kinds: choose values
// on s and on one representative of universe \ s, extend with swaps, filter
// by full invariance.
template <class Value, class ActValue, class BuildElem>
std::vector<ModelElem> enumerate_functions(const FiniteModel& m, const AtomVec& s,
                                           const std::vector<Value>& candidates,
                                           ActValue act_value, BuildElem build) {
    AtomVec free = m.universe() - s;
    if (free.empty()) throw std::invalid_argument("universe too small: no atom outside support");
    Atom rep = free.at(0);

    std::vector<Value> s_values = filter_slot_values(m, candidates, s, std::nullopt, act_value);
    std::vector<Value> rep_values = filter_slot_values(m, candidates, s, rep, act_value);
    if (!s.empty() && s_values.empty()) return {};

    std::vector<ModelElem> out;
    std::vector<std::size_t> choice(s.size(), 0);
    while (true) {
        for (const Value& rv : rep_values) {
            // tabulate a full function over the universe
            std::vector<Value> values;
            values.reserve(m.size());
            for (Atom u : m.universe()) {
                if (s.contains(u)) {
                    std::size_t slot = 0;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (s.at(i) == u) slot = i;
                    values.push_back(s_values[choice[slot]]);
                } else if (u == rep) {
                    values.push_back(rv);
                } else {
                    values.push_back(act_value(Perm::transpose(rep, u), rv));
                }
            }
            ModelElem f = build(std::move(values));
            if (check_support(m, f, s)) out.push_back(std::move(f));
        }
        std::size_t i = 0;
        for (; i < choice.size(); ++i) {
            if (++choice[i] < s_values.size()) break;
            choice[i] = 0;
        }
        if (i == choice.size() || s_values.empty()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ModelElem> enumerate_supported(const FiniteModel& m, Kind kind, const AtomVec& s,
                                           std::size_t arity, bool injective_rows) {
    if (!s.subset_of(m.universe()))
        throw std::invalid_argument("support atoms must lie inside the universe");
    // set and function kinds conflate finite with cofinite (and worse) when
    // too few atoms are free
    if (kind != Kind::Atoms && kind != Kind::InjTuples && m.size() < 2 * s.size() + 2)
        throw std::invalid_argument("universe below the 2|S|+2 threshold");
    std::vector<ModelElem> out;
    switch (kind) {
        case Kind::Atoms: {
            for (Atom a : m.universe())
                if (check_support(m, a, s)) out.push_back(a);
            break;
        }
        case Kind::Subsets: {
            for (const AtomVec& sub : all_subsets(m.universe())) {
                ModelElem e = ModelSet{sub};
                if (check_support(m, e, s)) out.push_back(std::move(e));
            }
            break;
        }
        case Kind::InjTuples: {
            for (std::size_t len = 0; len <= m.size(); ++len) {
                for (auto& t : all_tuples(m.universe(), len, true)) {
                    ModelElem e = ModelTuple{std::move(t)};
                    if (check_support(m, e, s)) out.push_back(std::move(e));
                }
            }
            break;
        }
        case Kind::FunAA: {
            std::vector<Atom> candidates = m.universe().items();
            return enumerate_functions(
                m, s, candidates, [](const Perm& g, Atom v) { return g(v); },
                [](std::vector<Atom> values) { return ModelElem{ModelFun{std::move(values)}}; });
        }
        case Kind::FunASet: {
            std::vector<AtomVec> candidates = all_subsets(m.universe());
            return enumerate_functions(
                m, s, candidates, [](const Perm& g, const AtomVec& v) { return act_vec(g, v); },
                [](std::vector<AtomVec> values) {
                    return ModelElem{ModelSetFun{std::move(values)}};
                });
        }
        case Kind::FunATuple: {
            if (arity == 0) throw std::invalid_argument("arity must be at least 1");
            std::vector<std::vector<Atom>> candidates =
                all_tuples(m.universe(), arity, injective_rows);
            return enumerate_functions(
                m, s, candidates,
                [](const Perm& g, const std::vector<Atom>& v) {
                    std::vector<Atom> image;
                    image.reserve(v.size());
                    for (Atom a : v) image.push_back(g(a));
                    return image;
                },
                [](std::vector<std::vector<Atom>> values) {
                    return ModelElem{ModelTupleFun{std::move(values)}};
                });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ModelElem> enumerate_inj_tuple_valued_funs(const FiniteModel& m, const AtomVec& s) {
    if (!s.subset_of(m.universe()))
        throw std::invalid_argument("support atoms must lie inside the universe");
    if (m.size() < 2 * s.size() + 2)
        throw std::invalid_argument("universe below the 2|S|+2 threshold");
    std::vector<std::vector<Atom>> candidates;
    for (std::size_t len = 0; len <= m.size(); ++len)
        for (auto& t : all_tuples(m.universe(), len, true)) candidates.push_back(std::move(t));
    return enumerate_functions(
        m, s, candidates,
        [](const Perm& g, const std::vector<Atom>& v) {
            std::vector<Atom> image;
            image.reserve(v.size());
            for (Atom a : v) image.push_back(g(a));
            return image;
        },
        [](std::vector<std::vector<Atom>> values) {
            return ModelElem{ModelTupleFun{std::move(values)}};
        });
}

bool no_total_order_on_atoms(const FiniteModel& m, const AtomVec& s) {
    if ((m.universe() - s).size() < 2)
        throw std::invalid_argument("need at least two atoms outside the fixed set");
    std::vector<Perm> gens = m.fix_generators(s);
    const std::size_t n = m.size();

    // a strict total order on the universe is a linear arrangement;
    // pos[i] = rank of universe atom i
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    std::sort(rank.begin(), rank.end());
    do {
        bool invariant = true;
        for (const Perm& g : gens) {
            for (std::size_t i = 0; i < n && invariant; ++i) {
                for (std::size_t j = 0; j < n && invariant; ++j) {
                    if (i == j) continue;
                    Atom x = m.universe().at(i), y = m.universe().at(j);
                    bool before = rank[i] < rank[j];
                    bool image_before = rank[m.index(g(x))] < rank[m.index(g(y))];
                    if (before != image_before) invariant = false;
                }
            }
            if (!invariant) break;
        }
        if (invariant) return false;  // found an invariant total order
    } while (std::next_permutation(rank.begin(), rank.end()));
    return true;
}

ModelElem embed(const FiniteModel& m, Atom a) {
    m.index(a);  // validates membership
    return a;
}

ModelElem embed(const FiniteModel& m, const AtomSet& x) {
    if (!x.atoms().subset_of(m.universe()))
        throw std::invalid_argument("set mentions atoms outside the universe");
    return ModelSet{x.is_finite() ? x.atoms() : m.universe() - x.atoms()};
}

ModelElem embed(const FiniteModel& m, const AtomFun& f) {
    std::vector<Atom> values;
    values.reserve(m.size());
    for (Atom u : m.universe()) values.push_back(f(u));
    return ModelFun{std::move(values)};
}

ModelElem embed(const FiniteModel& m, const AtomSetFun& f) {
    std::vector<AtomVec> values;
    values.reserve(m.size());
    for (Atom u : m.universe()) {
        AtomSet v = f(u);
        values.push_back(std::get<ModelSet>(embed(m, v)).elems);
    }
    return ModelSetFun{std::move(values)};
}

ModelElem embed(const FiniteModel& m, const TupleFun& f) {
    std::vector<std::vector<Atom>> values;
    values.reserve(m.size());
    for (Atom u : m.universe()) values.push_back(f(u));
    return ModelTupleFun{std::move(values)};
}

}  // namespace nominal::oracle
