#include <doctest.h>

#include <stdexcept>

#include "nominal/analyzer.hpp"
#include "nominal/atom_set.hpp"
#include "nominal/fun.hpp"
#include "nominal/oracle.hpp"

using namespace nominal;
using namespace nominal::analyzer;

namespace {

Result verdict_of(const std::string& text) { return analyze(parse_expr(text)).result; }

// distinctness of the first k descriptors plus invariance under sampled
// permutations fixing the common support
void require_good_witness(const std::string& text, std::size_t k = 20, std::size_t perms = 50) {
    Verdict v = analyze(parse_expr(text));
    REQUIRE(v.result == Result::UniformlyInfinite);
    REQUIRE(v.witness.has_value());

    std::vector<Elem> members = v.witness->first(k);
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            CHECK(members[i] != members[j]);

    AtomVec pool = v.witness->common_support;
    for (const Elem& m : members) pool |= supp(m);
    pool |= AtomVec(fresh_atoms(3));
    for (const Perm& p : sample_fix(v.witness->common_support, pool, perms, 99))
        for (const Elem& m : members) CHECK(act(p, m) == m);
}

}  // namespace

TEST_CASE("parser builds the expected trees") {
    CHECK(parse_expr("A").kind() == ExprKind::AtomsA);

    SetExpr e = parse_expr("Pfin(A) x Nat");
    REQUIRE(e.kind() == ExprKind::Prod);
    CHECK(e.left().kind() == ExprKind::PFin);
    CHECK(e.left().left().kind() == ExprKind::AtomsA);
    CHECK(e.right().kind() == ExprKind::Nat);

    SetExpr f = parse_expr("Fun(A, Pfs(A))");
    CHECK(f.kind() == ExprKind::FunAPfs);

    SetExpr g = parse_expr("Fun(A, A^3)");
    REQUIRE(g.kind() == ExprKind::FunAPow);
    CHECK(g.arity() == 3);

    // product binds tighter than sum
    SetExpr h = parse_expr("A + A x Nat");
    REQUIRE(h.kind() == ExprKind::Sum);
    CHECK(h.right().kind() == ExprKind::Prod);
}

TEST_CASE("parser reports offsets and unknown identifiers") {
    try {
        parse_expr("Pfin(A");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
    try {
        parse_expr("Foo");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
        CHECK(e.offset == 0);
    }
    CHECK_THROWS_AS(parse_expr("Fun(Nat, A)"), ParseError);
    CHECK_THROWS_AS(parse_expr("Fun(A, A^0)"), ParseError);
    CHECK_THROWS_AS(parse_expr("A x"), ParseError);
}

TEST_CASE("golden verdict table") {
    CHECK(verdict_of("A") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Pfs(A)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Tfin") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Fun(A, A)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Fun(A, Pfs(A))") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Fun(A, A^2)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Fun(A, Tfin)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("A x A") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("A + Pfs(A)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Pfin(A)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Pcofin(A)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Pfin(Pfs(A))") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Pfin(Pfin(Fun(A, A)))") == Result::NonUniformlyInfinite);

    CHECK(verdict_of("Tdelta") == Result::UniformlyInfinite);
    CHECK(verdict_of("Pfs(Pfin(A))") == Result::UniformlyInfinite);
    CHECK(verdict_of("Pfs(Pfs(A))") == Result::UniformlyInfinite);
    CHECK(verdict_of("Pfs(Tfin)") == Result::UniformlyInfinite);
    CHECK(verdict_of("Nat") == Result::UniformlyInfinite);
    CHECK(verdict_of("Nat x A") == Result::UniformlyInfinite);
    CHECK(verdict_of("A + Tdelta") == Result::UniformlyInfinite);
    CHECK(verdict_of("Pfin(Nat)") == Result::UniformlyInfinite);

    CHECK(verdict_of("Pfs(A x A)") == Result::Unknown);
    CHECK(verdict_of("Pcofin(Tdelta)") == Result::Unknown);

    // canonicalization: uniformly supported sets of atoms are finite sets
    Verdict pus = analyze(parse_expr("Pus(A)"));
    CHECK(pus.result == Result::NonUniformlyInfinite);
    bool found = false;
    for (const auto& t : pus.trace) found = found || t.rule == "us-atoms-canonical";
    CHECK(found);
}

TEST_CASE("traces are nonempty and carry notes") {
    for (const std::string& text :
         {"A", "Pfs(A)", "Tfin", "Fun(A, A)", "Fun(A, Pfs(A))", "A x A", "A + Pfs(A)", "Tdelta",
          "Pfs(Pfin(A))", "Nat", "Nat x A"}) {
        Verdict v = analyze(parse_expr(text));
        CHECK(v.result != Result::Unknown);
        REQUIRE_FALSE(v.trace.empty());
        for (const auto& t : v.trace) {
            CHECK_FALSE(t.rule.empty());
            CHECK_FALSE(t.note.empty());
        }
    }
    // unknown verdicts carry a reason instead
    Verdict u = analyze(parse_expr("Pfs(A x A)"));
    CHECK_FALSE(u.reason.empty());
    CHECK_FALSE(u.witness.has_value());
}

TEST_CASE("derived closure directions are flagged") {
    Verdict v = analyze(parse_expr("Nat x A"));
    bool derived_product = false;
    for (const auto& t : v.trace)
        if (t.rule == "product-ui") derived_product = derived_product || t.derived;
    CHECK(derived_product);

    // the uniform powerset of a trivial set is flagged in the trace
    Verdict w = analyze(parse_expr("Pus(Nat)"));
    REQUIRE(w.result == Result::UniformlyInfinite);
    bool flagged = false;
    for (const auto& t : w.trace) flagged = flagged || t.rule == "trivial-subsets-note";
    CHECK(flagged);
}

TEST_CASE("witness families: shape, distinctness, support invariance") {
    require_good_witness("Nat");
    require_good_witness("Tdelta");
    require_good_witness("Pfs(Pfin(A))");
    require_good_witness("Pfs(Tfin)");
    require_good_witness("Nat x A");
    require_good_witness("A + Tdelta");
    require_good_witness("Pfin(Tdelta)");

    // spot checks on the generators themselves
    WitnessFamily nat = witness(parse_expr("Nat"));
    CHECK(nat.common_support.empty());
    CHECK(nat.generator(3) == Elem::nat(3));

    WitnessFamily td = witness(parse_expr("Tdelta"));
    REQUIRE(td.common_support.size() == 1);
    Atom a = td.common_support.at(0);
    CHECK(td.generator(0) == Elem::tuple({}));
    CHECK(td.generator(2) == Elem::tuple({Elem::atom(a), Elem::atom(a)}));

    WitnessFamily sized = witness(parse_expr("Pfs(Pfin(A))"));
    CHECK(sized.common_support.empty());
    CHECK(sized.generator(2) != sized.generator(3));

    CHECK_THROWS_AS(witness(parse_expr("A")), std::invalid_argument);
}

TEST_CASE("analysis is deterministic bottom-up") {
    SetExpr whole = parse_expr("Pfin(A) x (Nat + Pfs(Pfin(A)))");
    Verdict v1 = analyze(whole);
    Verdict v2 = analyze(whole);
    CHECK(v1.result == v2.result);
    REQUIRE(v1.trace.size() == v2.trace.size());
    for (std::size_t i = 0; i < v1.trace.size(); ++i)
        CHECK(v1.trace[i].rule == v2.trace[i].rule);

    // the subexpressions' own verdicts agree with their role in the parent
    CHECK(verdict_of("Pfin(A)") == Result::NonUniformlyInfinite);
    CHECK(verdict_of("Nat + Pfs(Pfin(A))") == Result::UniformlyInfinite);
    CHECK(v1.result == Result::UniformlyInfinite);
}

TEST_CASE("supp_of_uniform_family unions member supports") {
    auto atoms = fresh_atoms(2);
    Atom a = atoms[0], b = atoms[1];

    CHECK(supp_of_uniform_family(std::vector<AtomVec>{{a}, {a, b}}) == AtomVec{a, b});
    CHECK(supp_of_uniform_family(std::vector<AtomVec>{}) == AtomVec{});

    // the two-element set {const_a, identity} has least support {a}:
    // confirmed in the finite model on the embedded functions
    AtomVec family_supp = supp_of_uniform_family(std::vector<AtomVec>{
        AtomFun::constant(a).normalized().carrier(), AtomFun::identity().carrier()});
    CHECK(family_supp == AtomVec{a});

    oracle::FiniteModel model = oracle::FiniteModel::containing(AtomVec{a}, 4);
    auto as_pair_set = [&](const Perm& p) {
        // act on both members; the *set* is fixed iff the images coincide
        // with the original pair (order-insensitive)
        auto f1 = act_elem(model, p, oracle::embed(model, AtomFun::constant(a)));
        auto f2 = act_elem(model, p, oracle::embed(model, AtomFun::identity()));
        std::vector<oracle::ModelElem> moved{f1, f2};
        std::sort(moved.begin(), moved.end());
        std::vector<oracle::ModelElem> orig{oracle::embed(model, AtomFun::constant(a)),
                                            oracle::embed(model, AtomFun::identity())};
        std::sort(orig.begin(), orig.end());
        return moved == orig;
    };
    for (const Perm& g : model.fix_generators(AtomVec{a})) CHECK(as_pair_set(g));
    AtomVec free = model.universe() - AtomVec{a};
    CHECK_FALSE(as_pair_set(Perm::transpose(a, free.at(0))));
}

TEST_CASE("check_chain computes common supports and verifies invariance") {
    // members of a trivially acted set
    std::vector<Elem> nats{Elem::nat(0), Elem::nat(1), Elem::nat(2)};
    auto nat_less = [](const Elem& x, const Elem& y) { return x.nat_value() < y.nat_value(); };
    ChainReport r1 = check_chain(nats, nat_less, {}, 31);
    CHECK(r1.common_support.empty());
    CHECK(r1.verified);

    // atoms with an arbitrary (representation) order
    auto atoms = fresh_atoms(3);
    std::vector<Elem> elems{Elem::atom(atoms[0]), Elem::atom(atoms[1]), Elem::atom(atoms[2])};
    auto id_less = [](const Elem& x, const Elem& y) { return x < y; };
    ChainReport r2 = check_chain(elems, id_less, {}, 31);
    CHECK(AtomVec(atoms).subset_of(r2.common_support));
    CHECK(r2.verified);

    // an inclusion chain of finite atom sets
    Atom a = atoms[0], b = atoms[1];
    std::vector<Elem> sets{Elem::fin_set({}), Elem::fin_set({Elem::atom(a)}),
                           Elem::fin_set({Elem::atom(a), Elem::atom(b)})};
    auto size_less = [](const Elem& x, const Elem& y) {
        return x.fin_set_items().size() < y.fin_set_items().size();
    };
    ChainReport r3 = check_chain(sets, size_less, {}, 31);
    CHECK(r3.common_support == AtomVec{a, b});
    CHECK(r3.verified);

    // an order that is not total on the members
    auto never = [](const Elem&, const Elem&) { return false; };
    CHECK_THROWS_AS(check_chain(elems, never, {}, 31), std::invalid_argument);
}
