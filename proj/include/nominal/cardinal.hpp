#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/elem.hpp"

namespace nominal::cardinal {

// 2^m * 3^n: an injection of pairs of naturals into the naturals (unique
// factorization). Throws std::overflow_error when the value leaves 64 bits.
std::uint64_t nat_pair_inject(std::uint64_t m, std::uint64_t n);

// b = 0 |-> 2^{n+1}, b = 1 |-> 3^{n+1}. The exponent offset keeps the map
// injective: without it both branches collide at n = 0 (2^0 = 3^0 = 1).
std::uint64_t nat_bool_inject(std::uint64_t n, bool b);

// The unshifted variant 2^n / 3^n, kept so the collision at n = 0 can be
// exhibited by the verification tooling. Not injective.
std::uint64_t nat_bool_inject_literal(std::uint64_t n, bool b);

// An executable cardinality witness: a mapping between descriptor sets with
// a declared support, plus samplers for the domain (and, for surjections, a
// section producing a preimage of a target element).
struct CardWitness {
    enum class Kind { Injection, Surjection, Bijection };

    Kind kind = Kind::Injection;
    std::string name;
    AtomVec declared_support;
    std::function<Elem(const Elem&)> mapping;
    std::function<Elem(std::uint64_t)> domain_gen;
    // surjections: target sampler and a section (Y -> domain) with
    // mapping(section(y)) == y
    std::function<Elem(std::uint64_t)> target_gen;
    std::function<Elem(const Elem&)> section;
};

// |X| <= |X| for any described X: the identity witness.
CardWitness identity_witness(std::string name, std::function<Elem(std::uint64_t)> domain_gen);

// |Nat x Nat| <= |Nat| and |Nat x {0,1}| <= |Nat|.
CardWitness nat_pair_witness();
CardWitness nat_bool_witness();
// The literal unshifted map; fails injectivity verification at n = 0.
CardWitness nat_bool_literal_witness();

// (x,0) |-> (x,x1), (x,1) |-> (x,x2): the doubling injection
// X x {0,1} -> X x X built from two distinct elements of X. Throws
// std::invalid_argument when x1 == x2. `x_gen` samples X.
CardWitness double_inject(const Elem& x1, const Elem& x2,
                          std::function<Elem(std::uint64_t)> x_gen, std::string name);

// (x,b) |-> x: the projection surjection certifying |X| <=* |X x {0,1}|.
CardWitness projection_witness(std::function<Elem(std::uint64_t)> x_gen, std::string name);

// Composition of injection witnesses (outer after inner); an injection
// again, exhibiting transitivity of <=.
CardWitness compose_witnesses(const CardWitness& outer, const CardWitness& inner);

enum class Relation { Leq, LeqStar };

struct RelationReport {
    bool ok = true;
    std::size_t samples = 0;
    std::vector<std::string> failures;

    std::string to_string() const;
};

// Leq: samples distinct domain pairs and checks the mapping keeps them
// distinct (an injection certifies |X| <= |Y|). LeqStar: samples targets
// and checks the section really is a preimage (a surjection certifies
// |X| <=* |Y|). Failures carry counterexamples.
RelationReport relation_check(Relation relation, const CardWitness& w, std::size_t samples,
                              std::uint64_t seed);

// mapping(p . x) == p . mapping(x) for sampled permutations fixing the
// declared support pointwise.
RelationReport equivariance_check(const CardWitness& w, std::size_t samples, std::uint64_t seed);

// The forced-image computation showing no finitely supported surjection
// Nat x A -> A x A exists: from f(i,a) = (a,b), swapping atoms outside the
// support forces f(i,b) = (b,a) (via the a<->b swap) and f(i,b) = (b,c)
// (via a<->c then c<->b), which clash.
struct ClashReport {
    Elem via_ab;   // value forced by the a<->b swap
    Elem via_cb;   // value forced by routing through c
    bool consistent = false;
};

ClashReport pair_surjection_clash(Atom a, Atom b, Atom c);

}  // namespace nominal::cardinal
