#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/perm.hpp"

namespace nominal {

// A finitely supported subset of the atoms. Exactly the finite and the
// cofinite subsets qualify, so the type is a tagged finite atom list:
// Finite(E) denotes E, Cofinite(C) denotes A \ C. A set that is both
// infinite and coinfinite is unrepresentable by construction.
class AtomSet {
public:
    AtomSet() = default;  // Finite {}

    static AtomSet finite(AtomVec elements) { return AtomSet(false, std::move(elements)); }
    static AtomSet cofinite(AtomVec coelements) { return AtomSet(true, std::move(coelements)); }
    static AtomSet all() { return cofinite({}); }

    bool is_finite() const { return !cofinite_; }
    bool is_cofinite() const { return cofinite_; }

    // Finite -> elements, Cofinite -> coelements. Either way this is the
    // least support of the set.
    const AtomVec& atoms() const { return atoms_; }

    bool member(Atom a) const { return cofinite_ ? !atoms_.contains(a) : atoms_.contains(a); }

    AtomSet complement() const { return AtomSet(!cofinite_, atoms_); }

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend auto operator<=>(const AtomSet&, const AtomSet&) = default;

    // "{a0,a1}", "A\{a0}", "A" for the cofinite set with empty co-part.
    std::string to_string() const;

private:
    AtomSet(bool cofinite, AtomVec atoms) : cofinite_(cofinite), atoms_(std::move(atoms)) {}

    bool cofinite_{false};
    AtomVec atoms_;
};

AtomSet set_union(const AtomSet& x, const AtomSet& y);
AtomSet set_intersection(const AtomSet& x, const AtomSet& y);
AtomSet set_difference(const AtomSet& x, const AtomSet& y);

inline bool member(Atom a, const AtomSet& x) { return x.member(a); }

// Elementwise image under a permutation; finite stays finite, cofinite
// stays cofinite (bijections commute with complement).
AtomSet act_set(const Perm& p, const AtomSet& x);

inline AtomVec act_vec(const Perm& p, const AtomVec& s) {
    std::vector<Atom> out;
    out.reserve(s.size());
    for (Atom a : s) out.push_back(p(a));
    return AtomVec(std::move(out));
}

inline AtomVec supp_atom(Atom a) { return AtomVec{a}; }
inline AtomVec supp_set(const AtomSet& x) { return x.atoms(); }

// Least support of a pair, given the least supports of its components.
inline AtomVec supp_pair(const AtomVec& x_supp, const AtomVec& y_supp) { return x_supp | y_supp; }

// Record of a support verification: the claimed support together with the
// swaps used to confirm it and whether each one behaved as required.
struct SupportReport {
    AtomVec support;
    std::vector<std::pair<Perm, bool>> witness_checks;
    bool supports = false;  // sampled Fix(support) permutations all fix x
    bool minimal = false;   // each support atom, swapped with a fresh atom, moves x

    bool ok() const { return supports && minimal; }
};

// Checks that `claimed` both supports x and is minimal, using sampled
// permutations. `act` maps (Perm, T) to T; `context` should contain the
// atoms x is built from (fresh atoms are added internally).
template <class T, class Act>
SupportReport verify_least_support(const T& x, const AtomVec& claimed, Act act,
                                   const AtomVec& context, std::uint64_t seed,
                                   std::size_t samples = 20) {
    SupportReport report;
    report.support = claimed;
    report.supports = true;
    report.minimal = true;

    AtomVec pool = claimed | context | AtomVec(fresh_atoms(3));
    for (const Perm& p : sample_fix(claimed, pool, samples, seed)) {
        bool fixed = act(p, x) == x;
        report.witness_checks.emplace_back(p, fixed);
        if (!fixed) report.supports = false;
    }
    for (Atom a : claimed) {
        Atom b = fresh_atom();
        Perm swap = Perm::transpose(a, b);
        bool moved = !(act(swap, x) == x);
        report.witness_checks.emplace_back(swap, moved);
        if (!moved) report.minimal = false;
    }
    return report;
}

}  // namespace nominal
