#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nominal/atom.hpp"
#include "nominal/elem.hpp"
#include "nominal/parse_error.hpp"
#include "nominal/perm.hpp"

namespace nominal::analyzer {

using nominal::ParseError;

// The grammar of analyzable constructions. Every expressible set is
// infinite and nonempty, which the composition rules rely on.
enum class ExprKind {
    AtomsA,    // A
    Nat,       // a countable set with trivial action
    Prod,      // e x e
    Sum,       // e + e
    PFin,      // Pfin(e)
    PCofin,    // Pcofin(e)
    PUs,       // Pus(e)
    PFs,       // Pfs(e)
    FunAA,     // Fun(A, A)
    FunAPfs,   // Fun(A, Pfs(A))
    FunAPow,   // Fun(A, A^n)
    FunATfin,  // Fun(A, Tfin)
    TFin,      // injective finite tuples of atoms
    TDelta,    // all finite tuples of atoms
};

class SetExpr {
public:
    static SetExpr atoms() { return SetExpr(ExprKind::AtomsA); }
    static SetExpr nat() { return SetExpr(ExprKind::Nat); }
    static SetExpr tfin() { return SetExpr(ExprKind::TFin); }
    static SetExpr tdelta() { return SetExpr(ExprKind::TDelta); }
    static SetExpr prod(SetExpr l, SetExpr r) { return SetExpr(ExprKind::Prod, l, r); }
    static SetExpr sum(SetExpr l, SetExpr r) { return SetExpr(ExprKind::Sum, l, r); }
    static SetExpr pfin(SetExpr e) { return SetExpr(ExprKind::PFin, e); }
    static SetExpr pcofin(SetExpr e) { return SetExpr(ExprKind::PCofin, e); }
    static SetExpr pus(SetExpr e) { return SetExpr(ExprKind::PUs, e); }
    static SetExpr pfs(SetExpr e) { return SetExpr(ExprKind::PFs, e); }
    static SetExpr fun_aa() { return SetExpr(ExprKind::FunAA); }
    static SetExpr fun_apfs() { return SetExpr(ExprKind::FunAPfs); }
    static SetExpr fun_apow(std::size_t n);
    static SetExpr fun_atfin() { return SetExpr(ExprKind::FunATfin); }

    ExprKind kind() const { return kind_; }
    const SetExpr& left() const { return *left_; }
    const SetExpr& right() const { return *right_; }
    std::size_t arity() const { return arity_; }

    std::string to_string() const;

private:
    explicit SetExpr(ExprKind k) : kind_(k) {}
    SetExpr(ExprKind k, SetExpr l) : kind_(k), left_(std::make_shared<SetExpr>(std::move(l))) {}
    SetExpr(ExprKind k, SetExpr l, SetExpr r)
        : kind_(k),
          left_(std::make_shared<SetExpr>(std::move(l))),
          right_(std::make_shared<SetExpr>(std::move(r))) {}

    ExprKind kind_;
    std::shared_ptr<SetExpr> left_, right_;
    std::size_t arity_ = 0;
};

// Grammar (products bind tighter than sums):
//   A | Nat | e x e | e + e | Pfin(e) | Pcofin(e) | Pus(e) | Pfs(e)
//   | Fun(A, A) | Fun(A, Pfs(A)) | Fun(A, A^n) | Fun(A, Tfin) | Tfin | Tdelta
SetExpr parse_expr(const std::string& text);

enum class Result { UniformlyInfinite, NonUniformlyInfinite, Unknown };

std::string result_name(Result r);

// One rule application: a stable rule id, a one-line justification, and
// whether the direction is a derived consequence of the base rules rather
// than one of them.
struct TraceEntry {
    std::string rule;
    std::string note;
    bool derived = false;
};

// An infinite uniformly supported family: a generator of pairwise distinct
// descriptors, all supported by the common support. The descriptors are
// their own distinctness keys (Elem equality is decidable).
struct WitnessFamily {
    AtomVec common_support;
    std::string family;  // human-readable description of the generator
    std::function<Elem(std::uint64_t)> generator;

    std::vector<Elem> first(std::size_t k) const;
};

struct Verdict {
    Result result = Result::Unknown;
    std::vector<TraceEntry> trace;
    std::optional<WitnessFamily> witness;  // present iff UniformlyInfinite
    std::string reason;                    // set for Unknown
};

Verdict analyze(const SetExpr& e);

// The witness family of a uniformly infinite expression; throws
// std::invalid_argument when analyze(e) is not UniformlyInfinite.
WitnessFamily witness(const SetExpr& e);

// Union of the members' least supports. For a uniformly supported set this
// union is the least support of the set itself.
AtomVec supp_of_uniform_family(const std::vector<AtomVec>& member_supports);
AtomVec supp_of_uniform_family(const std::vector<Elem>& members);

struct ChainReport {
    AtomVec common_support;
    bool verified = false;
    std::vector<std::pair<Perm, bool>> checks;
};

// For a finite totally ordered family: computes the common support
// (declared order support plus the member supports) and confirms, with
// sampled permutations fixing it, that every member is left fixed. Throws
// std::invalid_argument when the order is not total on the members.
ChainReport check_chain(const std::vector<Elem>& members,
                        const std::function<bool(const Elem&, const Elem&)>& less,
                        const AtomVec& order_support, std::uint64_t seed,
                        std::size_t samples = 50);

}  // namespace nominal::analyzer
