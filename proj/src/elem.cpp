#include "nominal/elem.hpp"

#include <algorithm>

namespace nominal {

Elem Elem::tuple(std::vector<Elem> items) { return Elem(Tuple{std::move(items)}); }

Elem Elem::fin_set(std::vector<Elem> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end(),
                            [](const Elem& a, const Elem& b) { return !(a < b) && !(b < a); }),
                items.end());
    return Elem(FinSet{std::move(items)});
}

Elem Elem::tagged(std::uint32_t tag, Elem inner) {
    return Elem(Tagged{tag, std::make_shared<const Elem>(std::move(inner))});
}

int Elem::compare(const Elem& a, const Elem& b) {
    if (a.node_.index() != b.node_.index())
        return a.node_.index() < b.node_.index() ? -1 : 1;
    auto cmp_vec = [](const std::vector<Elem>& x, const std::vector<Elem>& y) {
        for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
            int c = compare(x[i], y[i]);
            if (c != 0) return c;
        }
        if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
        return 0;
    };
    switch (a.node_.index()) {
        case 0: {
            auto x = std::get<std::uint64_t>(a.node_), y = std::get<std::uint64_t>(b.node_);
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        case 1: {
            auto x = std::get<Atom>(a.node_), y = std::get<Atom>(b.node_);
            return x == y ? 0 : (x < y ? -1 : 1);
        }
        case 2:
            return cmp_vec(std::get<Tuple>(a.node_).items, std::get<Tuple>(b.node_).items);
        case 3:
            return cmp_vec(std::get<FinSet>(a.node_).items, std::get<FinSet>(b.node_).items);
        case 4: {
            const auto& x = std::get<Tagged>(a.node_);
            const auto& y = std::get<Tagged>(b.node_);
            if (x.tag != y.tag) return x.tag < y.tag ? -1 : 1;
            return compare(*x.inner, *y.inner);
        }
        default: {
            const auto& x = std::get<std::string>(a.node_);
            const auto& y = std::get<std::string>(b.node_);
            return x == y ? 0 : (x < y ? -1 : 1);
        }
    }
}

std::string Elem::to_string() const {
    struct Visitor {
        std::string operator()(std::uint64_t k) const { return std::to_string(k); }
        std::string operator()(Atom a) const { return atom_name(a); }
        std::string operator()(const Tuple& t) const {
            std::string s = "(";
            for (std::size_t i = 0; i < t.items.size(); ++i) {
                if (i) s += ",";
                s += t.items[i].to_string();
            }
            return s + ")";
        }
        std::string operator()(const FinSet& t) const {
            std::string s = "{";
            for (std::size_t i = 0; i < t.items.size(); ++i) {
                if (i) s += ",";
                s += t.items[i].to_string();
            }
            return s + "}";
        }
        std::string operator()(const Tagged& t) const {
            return "in" + std::to_string(t.tag) + "(" + t.inner->to_string() + ")";
        }
        std::string operator()(const std::string& key) const { return key; }
    };
    return std::visit(Visitor{}, node_);
}

Elem act(const Perm& p, const Elem& e) {
    struct Visitor {
        const Perm& p;
        Elem operator()(std::uint64_t k) const { return Elem::nat(k); }
        Elem operator()(Atom a) const { return Elem::atom(p(a)); }
        Elem operator()(const Elem::Tuple& t) const {
            std::vector<Elem> items;
            items.reserve(t.items.size());
            for (const Elem& x : t.items) items.push_back(act(p, x));
            return Elem::tuple(std::move(items));
        }
        Elem operator()(const Elem::FinSet& t) const {
            std::vector<Elem> items;
            items.reserve(t.items.size());
            for (const Elem& x : t.items) items.push_back(act(p, x));
            return Elem::fin_set(std::move(items));
        }
        Elem operator()(const Elem::Tagged& t) const {
            return Elem::tagged(t.tag, act(p, *t.inner));
        }
        Elem operator()(const std::string& key) const { return Elem::sym(key); }
    };
    return std::visit(Visitor{p}, e.node_);
}

AtomVec supp(const Elem& e) {
    struct Visitor {
        AtomVec operator()(std::uint64_t) const { return {}; }
        AtomVec operator()(Atom a) const { return AtomVec{a}; }
        AtomVec operator()(const Elem::Tuple& t) const {
            AtomVec s;
            for (const Elem& x : t.items) s |= supp(x);
            return s;
        }
        AtomVec operator()(const Elem::FinSet& t) const {
            AtomVec s;
            for (const Elem& x : t.items) s |= supp(x);
            return s;
        }
        AtomVec operator()(const Elem::Tagged& t) const { return supp(*t.inner); }
        AtomVec operator()(const std::string&) const { return {}; }
    };
    return std::visit(Visitor{}, e.node_);
}

}  // namespace nominal
