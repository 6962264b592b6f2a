#include "nominal/atom_set.hpp"

namespace nominal {

std::string AtomSet::to_string() const {
    if (!cofinite_) return atoms_.to_string();
    if (atoms_.empty()) return "A";
    return "A\\" + atoms_.to_string();
}

AtomSet set_union(const AtomSet& x, const AtomSet& y) {
    if (x.is_finite() && y.is_finite()) return AtomSet::finite(x.atoms() | y.atoms());
    if (x.is_cofinite() && y.is_cofinite()) return AtomSet::cofinite(x.atoms() & y.atoms());
    const AtomSet& fin = x.is_finite() ? x : y;
    const AtomSet& cof = x.is_finite() ? y : x;
    return AtomSet::cofinite(cof.atoms() - fin.atoms());
}

AtomSet set_intersection(const AtomSet& x, const AtomSet& y) {
    if (x.is_finite() && y.is_finite()) return AtomSet::finite(x.atoms() & y.atoms());
    if (x.is_cofinite() && y.is_cofinite()) return AtomSet::cofinite(x.atoms() | y.atoms());
    const AtomSet& fin = x.is_finite() ? x : y;
    const AtomSet& cof = x.is_finite() ? y : x;
    return AtomSet::finite(fin.atoms() - cof.atoms());
}

AtomSet set_difference(const AtomSet& x, const AtomSet& y) {
    return set_intersection(x, y.complement());
}

AtomSet act_set(const Perm& p, const AtomSet& x) {
    AtomVec image = act_vec(p, x.atoms());
    return x.is_finite() ? AtomSet::finite(std::move(image)) : AtomSet::cofinite(std::move(image));
}

}  // namespace nominal
