#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/fun.hpp"
#include "nominal/perm.hpp"

namespace nominal::fixpoint {

// A combinator-built self-map on the finite subsets of A. Every constructor
// preserves monotonicity w.r.t. inclusion, and the declared support (the
// union of the component supports) supports the denotation, which bounds
// the fixed-point iteration. Opaque wraps a user-supplied map with a
// claimed support; the claim is spot-checked before iterating.
class MonotoneMap {
public:
    static MonotoneMap identity();
    static MonotoneMap const_union(AtomVec add);      // Z |-> Z u C
    static MonotoneMap image_union(AtomFun g);        // Z |-> Z u g[Z]
    static MonotoneMap perm_image(Perm p);            // Z |-> p . Z
    static MonotoneMap union_of(MonotoneMap l, MonotoneMap r);
    static MonotoneMap compose_of(MonotoneMap outer, MonotoneMap inner);
    static MonotoneMap opaque(std::function<AtomVec(const AtomVec&)> fn, AtomVec declared_support,
                              std::string name);

    AtomVec operator()(const AtomVec& z) const;

    // Union of the component supports over the whole tree.
    AtomVec support() const;

    // True when the shape alone guarantees Z subseteq f(Z): const/image
    // unions, identity, and unions/compositions of such maps.
    bool structurally_progressive() const;

    bool is_opaque() const;

    std::string to_string() const;

    friend MonotoneMap conjugate(const Perm& p, const MonotoneMap& m);

private:
    struct Identity {};
    struct ConstUnion {
        AtomVec add;
    };
    struct ImageUnion {
        AtomFun g;
    };
    struct PermImage {
        Perm p;
    };
    struct UnionOf {
        std::shared_ptr<const MonotoneMap> l, r;
    };
    struct ComposeOf {
        std::shared_ptr<const MonotoneMap> outer, inner;
    };
    struct Opaque {
        std::function<AtomVec(const AtomVec&)> fn;
        AtomVec declared;
        std::string name;
    };

    using Node = std::variant<Identity, ConstUnion, ImageUnion, PermImage, UnionOf, ComposeOf,
                              Opaque>;
    explicit MonotoneMap(Node node) : node_(std::move(node)) {}

    Node node_;
};

MonotoneMap conjugate(const Perm& p, const MonotoneMap& m);

inline AtomVec support_of_map(const MonotoneMap& m) { return m.support(); }

struct FixpointResult {
    AtomVec fixpoint;
    std::size_t steps = 0;               // least n with f^n(Z0) = f^{n+1}(Z0)
    std::vector<AtomVec> chain;          // iterates including the confirming repeat
};

enum class FailureKind {
    BoundExceeded,          // iteration ran past the support-derived bound
    ProgressivityViolation,  // some step had f(Z) not including Z
    SupportClaimViolation,  // an iterate escaped the declared support, or
                            // conjugation sampling refuted the claim
};

// Iteration failures carry the offending chain: they indicate the map's
// support or progressivity claim is wrong, not a state of the lattice.
class FixpointError : public std::runtime_error {
public:
    FixpointError(FailureKind kind, std::string message, std::vector<AtomVec> chain)
        : std::runtime_error(std::move(message)), kind(kind), chain(std::move(chain)) {}

    FailureKind kind;
    std::vector<AtomVec> chain;
};

// Ascending iteration from the empty set to the least fixed point. The
// chain is uniformly supported by the map's support, so it stabilizes after
// at most |support| strict steps; running past that (or past max_iter)
// throws FixpointError. max_iter == 0 means |support| + 2.
FixpointResult lfp_from_empty(const MonotoneMap& m, std::size_t max_iter = 0);

// Ascending iteration from an arbitrary finite start; requires the map to
// be progressive (checked per step when the shape does not guarantee it).
FixpointResult iterate_to_fix(const MonotoneMap& m, const AtomVec& z0, std::size_t max_iter = 0);

struct SampleCheck {
    AtomVec input;
    AtomVec output;
    bool ok = false;
};

struct ProgressiveReport {
    std::vector<SampleCheck> samples;
    std::size_t passes = 0;
    bool all_pass() const { return passes == samples.size(); }
    std::string to_string() const;
};

// Samples finite sets Z containing the map's support and verifies each is a
// fixed point (for a progressive map they all are). Failures are reported,
// not thrown: a failure refutes the declared support.
ProgressiveReport progressive_fixed_points_check(const MonotoneMap& m, std::size_t samples,
                                                 std::uint64_t seed);

enum class StrictStatus { Pass, Fail, NotStrict };

struct StrictSample {
    AtomVec input;       // the sampled X
    AtomVec candidate;   // X minus the support
    StrictStatus status = StrictStatus::NotStrict;
};

struct StrictReport {
    std::vector<StrictSample> samples;
    std::size_t passes = 0, failures = 0, not_strict = 0;
    std::string to_string() const;
};

// Tests the conjecture that a strictly order-preserving map fixes every set
// X \ support(f). Samples X, probes strictness on nearby pairs first, and
// marks the sample N/A when the map is not strictly order-preserving there.
StrictReport strict_monotone_fixed_points_check(const MonotoneMap& m, std::size_t samples,
                                                std::uint64_t seed);

}  // namespace nominal::fixpoint
