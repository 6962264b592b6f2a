#pragma once

#include <compare>
#include <cstdint>
#include <variant>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/atom_set.hpp"
#include "nominal/fun.hpp"
#include "nominal/kind.hpp"
#include "nominal/perm.hpp"

namespace nominal::oracle {

// Concrete inhabitants of a finite model. Functions are stored as value
// vectors parallel to the sorted universe.
struct ModelSet {
    AtomVec elems;
    friend bool operator==(const ModelSet&, const ModelSet&) = default;
    friend auto operator<=>(const ModelSet&, const ModelSet&) = default;
};
struct ModelTuple {
    std::vector<Atom> items;
    friend bool operator==(const ModelTuple&, const ModelTuple&) = default;
    friend auto operator<=>(const ModelTuple&, const ModelTuple&) = default;
};
struct ModelFun {
    std::vector<Atom> values;
    friend bool operator==(const ModelFun&, const ModelFun&) = default;
    friend auto operator<=>(const ModelFun&, const ModelFun&) = default;
};
struct ModelSetFun {
    std::vector<AtomVec> values;
    friend bool operator==(const ModelSetFun&, const ModelSetFun&) = default;
    friend auto operator<=>(const ModelSetFun&, const ModelSetFun&) = default;
};
struct ModelTupleFun {
    std::vector<std::vector<Atom>> values;
    friend bool operator==(const ModelTupleFun&, const ModelTupleFun&) = default;
    friend auto operator<=>(const ModelTupleFun&, const ModelTupleFun&) = default;
};

using ModelElem = std::variant<Atom, ModelSet, ModelTuple, ModelFun, ModelSetFun, ModelTupleFun>;

std::string model_elem_to_string(const ModelElem& e);

// A brute-force model: a concrete finite universe of atoms acted on by its
// transpositions. Within the model, the permutations fixing S pointwise are
// generated by the transpositions inside universe \ S, so support checking
// reduces to finitely many swaps.
class FiniteModel {
public:
    explicit FiniteModel(AtomVec universe);

    // A model whose universe contains s, padded with fresh atoms up to n.
    static FiniteModel containing(const AtomVec& s, std::size_t n);

    const AtomVec& universe() const { return universe_; }
    std::size_t size() const { return universe_.size(); }
    std::size_t index(Atom a) const;  // position in the sorted universe

    // Transpositions of universe \ s: generators of the pointwise
    // stabilizer of s within the model.
    std::vector<Perm> fix_generators(const AtomVec& s) const;

private:
    AtomVec universe_;
};

ModelElem act_elem(const FiniteModel& m, const Perm& p, const ModelElem& e);

// True iff the element is fixed by every transposition of universe \ s.
bool check_support(const FiniteModel& m, const ModelElem& e, const AtomVec& s);

// All model elements of the given kind fixed by every Fix(s) generator.
// Function kinds are generated by choosing values on s plus one orbit
// representative of universe \ s and extending equivariantly, then
// filtering; never by walking all |universe|^|universe| functions.
// `arity` applies to FunATuple; `injective_rows` restricts FunATuple to
// injective-tuple values.
std::vector<ModelElem> enumerate_supported(const FiniteModel& m, Kind kind, const AtomVec& s,
                                           std::size_t arity = 1, bool injective_rows = false);

// All s-supported functions from the universe into the injective tuples
// over the universe, of any length (each such function has one fixed tuple
// length outside s but arbitrary lengths on s). Representative extension,
// as above.
std::vector<ModelElem> enumerate_inj_tuple_valued_funs(const FiniteModel& m, const AtomVec& s);

// Exhaustively checks that no strict total order on the universe is
// invariant under all transpositions of universe \ s. Requires at least two
// atoms outside s.
bool no_total_order_on_atoms(const FiniteModel& m, const AtomVec& s);

// Embeddings of symbolic values into a model large enough to keep them
// apart (cofinite sets become large subsets of the universe).
ModelElem embed(const FiniteModel& m, Atom a);
ModelElem embed(const FiniteModel& m, const AtomSet& x);
ModelElem embed(const FiniteModel& m, const AtomFun& f);
ModelElem embed(const FiniteModel& m, const AtomSetFun& f);
ModelElem embed(const FiniteModel& m, const TupleFun& f);

}  // namespace nominal::oracle
