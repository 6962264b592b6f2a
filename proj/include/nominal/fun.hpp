#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/atom_set.hpp"
#include "nominal/perm.hpp"

namespace nominal {

// All subsets of s, in mask order (2^|s| entries).
std::vector<AtomVec> subsets_of(const AtomVec& s);
// All AtomSets whose least support is contained in s: the finite subsets
// of s and the cofinite sets with co-part inside s (2^{|s|+1} entries).
std::vector<AtomSet> atom_sets_supported_by(const AtomVec& s);

// A finitely supported function A -> A: a table on a finite carrier plus a
// uniform behaviour outside it. Outside the carrier the function is either
// the identity or constantly equal to a carrier atom; no other tail is
// possible for a function supported by the carrier.
class AtomFun {
public:
    enum class Tail { Identity, Const };

    AtomFun() = default;  // the identity function

    static AtomFun identity() { return AtomFun{}; }
    static AtomFun constant(Atom c);
    // A permutation seen as a function (table = move table, identity tail).
    static AtomFun from_perm(const Perm& p);
    // Validates: table total on carrier, values inside carrier, const atom
    // inside carrier. Throws std::invalid_argument otherwise.
    static AtomFun make(const AtomVec& carrier, const std::map<Atom, Atom>& table, Tail tail,
                        std::optional<Atom> const_atom = std::nullopt);

    Atom operator()(Atom a) const;

    const AtomVec& carrier() const { return carrier_; }
    const std::map<Atom, Atom>& table() const { return table_; }
    Tail tail() const { return tail_; }
    Atom const_atom() const { return const_atom_; }

    // Least-support form: drops every carrier atom whose table entry already
    // agrees with the tail, provided nothing else in the kept table mentions
    // it (a value must stay inside the carrier). Idempotent.
    AtomFun normalized() const;

    // Equality of denotations, decided on normalized forms.
    friend bool operator==(const AtomFun& f, const AtomFun& g) {
        return f.normalized().key() == g.normalized().key();
    }
    friend bool operator<(const AtomFun& f, const AtomFun& g) {
        return f.normalized().key() < g.normalized().key();
    }

    // "fun{a->b, b->a; tail=id}" / "fun{a->a; tail=const a}"
    std::string to_string() const;

private:
    using Key = std::tuple<Tail, Atom, AtomVec, std::vector<std::pair<Atom, Atom>>>;
    Key key() const;

    AtomVec carrier_;
    std::map<Atom, Atom> table_;
    Tail tail_{Tail::Identity};
    Atom const_atom_{};  // meaningful only when tail_ == Const
};

inline Atom apply_fun(const AtomFun& f, Atom a) { return f(a); }
inline AtomFun normalize(const AtomFun& f) { return f.normalized(); }

// compose_funs(f, g)(x) = f(g(x)); the result is supported by the union of
// the carriers and is returned normalized.
AtomFun compose_funs(const AtomFun& f, const AtomFun& g);

// x |-> p(f(p^{-1}(x))): the image of f under the permutation action on
// function spaces.
AtomFun conjugate(const Perm& p, const AtomFun& f);

bool is_injective(const AtomFun& f);
bool is_surjective(const AtomFun& f);

// All functions A -> A supported by a subset of s, normalized, in canonical
// order. |s|^|s| * (|s|+1) functions for nonempty s, one (the identity) for
// empty s.
std::vector<AtomFun> enumerate_atom_funs(const AtomVec& s);

// A finitely supported function A -> Pfs(A). On the carrier the values are
// explicit AtomSets supported by the carrier; outside, the value is one of
// the four uniform shapes below, built over a fixed part X of the carrier.
class AtomSetFun {
public:
    enum class Tail {
        FinWithSelf,      // a |-> {a} u X
        FinConst,         // a |-> X
        CofinWithoutSelf,  // a |-> A \ ({a} u X)
        CofinConst,       // a |-> A \ X
    };

    static AtomSetFun make(const AtomVec& carrier, const std::map<Atom, AtomSet>& table, Tail tail,
                           const AtomVec& tail_part);

    AtomSet operator()(Atom a) const;
    AtomSet tail_value_at(Atom a) const;  // denotation the tail would give a

    const AtomVec& carrier() const { return carrier_; }
    const std::map<Atom, AtomSet>& table() const { return table_; }
    Tail tail() const { return tail_; }
    const AtomVec& tail_part() const { return tail_part_; }

    AtomSetFun normalized() const;

    friend bool operator==(const AtomSetFun& f, const AtomSetFun& g) {
        return f.normalized().key() == g.normalized().key();
    }
    friend bool operator<(const AtomSetFun& f, const AtomSetFun& g) {
        return f.normalized().key() < g.normalized().key();
    }

    // "fun{a->{a}; tail=self+{}}", tails: self+{..} | const{..} |
    // cofin-self+{..} | cofin{..}
    std::string to_string() const;

private:
    using Key = std::tuple<Tail, AtomVec, AtomVec, std::vector<std::pair<Atom, AtomSet>>>;
    Key key() const;

    AtomVec carrier_;
    std::map<Atom, AtomSet> table_;
    Tail tail_{Tail::FinConst};
    AtomVec tail_part_;
};

inline AtomSet apply_set_fun(const AtomSetFun& f, Atom a) { return f(a); }

AtomSetFun conjugate(const Perm& p, const AtomSetFun& f);

// All functions A -> Pfs(A) supported by a subset of s, in canonical order:
// (2^{|s|+1})^{|s|} * 4 * 2^{|s|} functions.
std::vector<AtomSetFun> enumerate_set_funs(const AtomVec& s);

// A finitely supported function A -> A^n: one table row per carrier atom
// plus a tail pattern whose entries are carrier atoms or SELF (the argument
// itself). Componentwise this is an n-tuple of AtomFuns over a shared
// carrier.
class TupleFun {
public:
    // pattern entry: nullopt = SELF, otherwise a carrier atom.
    using Pattern = std::vector<std::optional<Atom>>;

    static TupleFun make(const AtomVec& carrier, std::size_t arity,
                         const std::map<Atom, std::vector<Atom>>& table, const Pattern& pattern);

    std::vector<Atom> operator()(Atom a) const;

    std::size_t arity() const { return arity_; }
    const AtomVec& carrier() const { return carrier_; }
    const std::map<Atom, std::vector<Atom>>& table() const { return table_; }
    const Pattern& pattern() const { return pattern_; }

    std::vector<AtomFun> components() const;

    // True when every table row is an injective tuple and the pattern has
    // pairwise distinct atoms with at most one SELF; such functions land in
    // the injective tuples.
    bool injective_valued() const;

    TupleFun normalized() const;

    friend bool operator==(const TupleFun& f, const TupleFun& g) {
        return f.normalized().key() == g.normalized().key();
    }
    friend bool operator<(const TupleFun& f, const TupleFun& g) {
        return f.normalized().key() < g.normalized().key();
    }

    std::string to_string() const;

private:
    using Key = std::tuple<std::size_t, AtomVec, std::vector<std::optional<Atom>>,
                           std::vector<std::pair<Atom, std::vector<Atom>>>>;
    Key key() const;

    AtomVec carrier_;
    std::size_t arity_{0};
    std::map<Atom, std::vector<Atom>> table_;
    Pattern pattern_;
};

inline std::vector<Atom> apply_tuple_fun(const TupleFun& f, Atom a) { return f(a); }

// All functions A -> A^n supported by a subset of s (n >= 1):
// |s|^{n|s|} * (|s|+1)^n functions for nonempty s, the diagonal for empty s.
std::vector<TupleFun> enumerate_tuple_funs(const AtomVec& s, std::size_t n);

// The injective-valued slice of the above (rows injective, pattern injective
// with at most one SELF): the functions A -> A^n landing in injective
// tuples.
std::vector<TupleFun> enumerate_injective_tuple_funs(const AtomVec& s, std::size_t n);

}  // namespace nominal
