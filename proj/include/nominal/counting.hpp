#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/kind.hpp"
#include "nominal/oracle.hpp"

namespace nominal::counting {

// Whether a count is taken directly from the catalogue of supported slices
// or derived here (the catalogue states some of them only as upper bounds;
// exactness is discharged against the oracle).
enum class Provenance { Stated, Derived };

struct CountFormula {
    Kind kind;
    Provenance provenance;
    std::string note;  // one-line description of the closed form
};

const std::vector<CountFormula>& formula_registry();

// Number of elements of the given kind supported by some fixed set of s
// atoms. `arity` applies to FunATuple only. Throws on unsupported kinds
// (there are none today; the CLI maps unknown names to a usage error).
std::uint64_t count_supported(Kind kind, std::size_t s, std::size_t arity = 1);

// Derived counts for the injective-valued slice of the tuple functions:
// rows are injective tuples over S and the tail pattern is injective with
// at most one SELF, so with the falling factorial F(s,k) the count is
// F(s,n)^s * (F(s,n) + n*F(s,n-1)). Cross-checked against the enumeration.
std::uint64_t count_inj_tuple_funs(std::size_t s, std::size_t n);

// Functions from the atoms into the injective finite tuples, supported by
// an s-sized set: outside S such a function lands in tuples of one fixed
// length <= s+1, so the count is 1 (the constant empty tuple) plus the
// injective tuple-function counts over the possible arities.
std::uint64_t count_funs_to_inj_tuples(std::size_t s);

// The symbolic enumerations behind the counts, used by cross-checks.
std::vector<AtomSet> enumerate_subsets_supported_by(const AtomVec& s);
std::vector<std::vector<Atom>> enumerate_inj_tuples_over(const AtomVec& s);

struct CrossCheckReport {
    Kind kind{};
    std::size_t arity = 1;
    AtomVec support;
    std::size_t universe = 0;
    std::uint64_t formula_count = 0;
    std::uint64_t symbolic_count = 0;
    std::uint64_t oracle_count = 0;
    bool counts_match = false;
    // element-for-element: the embedded symbolic enumeration equals the
    // oracle enumeration as a set
    bool bijection = false;
    std::vector<std::string> diagnostics;

    bool ok() const { return counts_match && bijection; }
    std::string to_string() const;
};

// Compares, for one (kind, S), the closed-form count, the length of the
// symbolic enumeration, and the oracle enumeration in a model of the given
// size, and matches the two enumerations element by element. The universe
// must leave enough free atoms: n >= 2|S|+2 always, and n >= |S|+3 for
// function kinds (a 2-atom free orbit has an abelian symmetric group, which
// makes the in-model swap spuriously equivariant).
CrossCheckReport cross_check(Kind kind, const AtomVec& s, std::size_t n, std::size_t arity = 1);

// Smallest universe size cross_check accepts for this kind.
std::size_t min_universe(Kind kind, std::size_t support_size);

}  // namespace nominal::counting
