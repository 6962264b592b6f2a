#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nominal/atom.hpp"

namespace nominal {

// A finitary permutation of the atoms: a bijection of A that moves only
// finitely many atoms, stored as its fixed-point-free move table. The
// canonical form (no entry a->a) makes structural equality coincide with
// extensional equality.
class Perm {
public:
    Perm() = default;  // identity

    static Perm identity() { return Perm{}; }
    static Perm transpose(Atom a, Atom b);
    // Builds a permutation from an arbitrary move table; rejects tables that
    // are not bijections on their carrier. Fixed points are dropped.
    static Perm from_moves(const std::map<Atom, Atom>& moves);
    // Single cycle a0 -> a1 -> ... -> ak -> a0; atoms must be distinct.
    static Perm cycle(const std::vector<Atom>& atoms);

    Atom operator()(Atom a) const;
    bool is_identity() const { return moves_.empty(); }

    // Atoms moved by this permutation (domain of the move table).
    AtomVec moved() const;

    Perm inverse() const;
    // Disjoint cycles, each rotated to start at its least atom, sorted by
    // that atom. Representation-level ordering only.
    std::vector<std::vector<Atom>> cycles() const;

    // Least m >= 1 with p^m = identity (lcm of the cycle lengths).
    std::uint64_t order() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

    // "(a0 a1)(a2 a3 a4)"; identity prints as "()".
    std::string to_string() const;

    const std::map<Atom, Atom>& moves() const { return moves_; }

private:
    std::map<Atom, Atom> moves_;
};

// apply(p, a) == p(a); kept as a free function to mirror the group action.
inline Atom apply(const Perm& p, Atom a) { return p(a); }

// compose(p, q) applies q first: compose(p, q)(x) = p(q(x)).
Perm compose(const Perm& p, const Perm& q);
inline Perm inverse(const Perm& p) { return p.inverse(); }
inline Perm transpose(Atom a, Atom b) { return Perm::transpose(a, b); }
inline std::uint64_t perm_order(const Perm& p) { return p.order(); }

// k permutations fixing `fixed` pointwise and moving only atoms of
// `pool` \ `fixed`, drawn deterministically from the seed. When k >= 1 and
// at least two pool atoms are free, the result contains a non-identity
// permutation.
std::vector<Perm> sample_fix(const AtomVec& fixed, const AtomVec& pool, std::size_t k,
                             std::uint64_t seed);

}  // namespace nominal
