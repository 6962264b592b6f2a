#include <doctest.h>

#include <stdexcept>

#include <random>

#include "nominal/atom_set.hpp"
#include "nominal/oracle.hpp"

using namespace nominal;

namespace {

// characteristic-vector comparison inside a finite model
bool same_in_model(const oracle::FiniteModel& m, const AtomSet& x, const AtomSet& y) {
    for (Atom u : m.universe())
        if (x.member(u) != y.member(u)) return false;
    return true;
}

}  // namespace

TEST_CASE("action on sets is elementwise and kind-preserving") {
    auto atoms = fresh_atoms(3);
    Atom a = atoms[0], b = atoms[1];

    CHECK(act_set(transpose(a, b), AtomSet::finite({a})) == AtomSet::finite({b}));
    CHECK(act_set(transpose(a, b), AtomSet::cofinite({a})) == AtomSet::cofinite({b}));
    AtomSet x = AtomSet::cofinite({a, atoms[2]});
    CHECK(act_set(Perm::identity(), x) == x);
}

TEST_CASE("supports of atoms and sets") {
    auto atoms = fresh_atoms(4);
    Atom a = atoms[0], b = atoms[1];

    CHECK(supp_atom(a) == AtomVec{a});
    CHECK(supp_atom(b) == AtomVec{b});
    // a transposition of two atoms outside {a} fixes a
    CHECK(transpose(atoms[2], atoms[3])(a) == a);

    CHECK(supp_set(AtomSet::finite({a, b})) == AtomVec{a, b});
    CHECK(supp_set(AtomSet::cofinite({a})) == AtomVec{a});
    CHECK(supp_set(AtomSet::finite({})) == AtomVec{});

    CHECK(supp_pair(AtomVec{a}, AtomVec{b}) == AtomVec{a, b});
    CHECK(supp_pair(AtomVec{}, AtomVec{}) == AtomVec{});
    CHECK(supp_pair(AtomVec{a}, AtomVec{a}) == AtomVec{a});
}

TEST_CASE("boolean algebra with finite/cofinite case analysis") {
    auto atoms = fresh_atoms(5);
    Atom a = atoms[0], b = atoms[1];

    // checked against the characteristic vectors below as well
    CHECK(set_union(AtomSet::finite({a}), AtomSet::cofinite({a, b})) == AtomSet::cofinite({b}));
    CHECK(set_intersection(AtomSet::finite({a}), AtomSet::finite({b})) == AtomSet::finite({}));
    CHECK_FALSE(member(a, AtomSet::cofinite({a})));
    CHECK(member(b, AtomSet::cofinite({a})));

    // model two atoms larger than everything mentioned, so finite and
    // cofinite stay apart
    oracle::FiniteModel model = oracle::FiniteModel::containing(AtomVec(atoms), atoms.size() + 2);
    std::mt19937_64 rng(11);
    auto random_set = [&]() {
        AtomVec part;
        for (Atom u : atoms)
            if (rng() % 2) part.insert(u);
        return rng() % 2 ? AtomSet::finite(part) : AtomSet::cofinite(part);
    };
    for (int trial = 0; trial < 200; ++trial) {
        AtomSet x = random_set(), y = random_set();
        AtomSet u = set_union(x, y), i = set_intersection(x, y), d = set_difference(x, y);
        for (Atom v : atoms) {
            CHECK(u.member(v) == (x.member(v) || y.member(v)));
            CHECK(i.member(v) == (x.member(v) && y.member(v)));
            CHECK(d.member(v) == (x.member(v) && !y.member(v)));
        }
        // De Morgan and absorption
        CHECK(same_in_model(model, set_union(x, y).complement(),
                            set_intersection(x.complement(), y.complement())));
        CHECK(same_in_model(model, set_intersection(x, y).complement(),
                            set_union(x.complement(), y.complement())));
        CHECK(same_in_model(model, set_union(x, set_intersection(x, y)), x));
        CHECK(same_in_model(model, set_intersection(x, set_union(x, y)), x));
    }
}

TEST_CASE("a finite set never equals a cofinite set") {
    auto atoms = fresh_atoms(2);
    CHECK(AtomSet::finite({atoms[0]}) != AtomSet::cofinite({atoms[0]}));
    CHECK(AtomSet::finite({}) != AtomSet::all());
}

TEST_CASE("display forms") {
    auto atoms = fresh_atoms(2);
    set_atom_label(atoms[0], "a");
    set_atom_label(atoms[1], "b");
    CHECK(AtomSet::finite({atoms[0], atoms[1]}).to_string() == "{a,b}");
    CHECK(AtomSet::cofinite({atoms[0]}).to_string() == "A\\{a}");
    CHECK(AtomSet::all().to_string() == "A");
    CHECK(AtomSet::finite({}).to_string() == "{}");
}

TEST_CASE("support equivariance and minimality for sets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto atoms = fresh_atoms(5);
        AtomVec part;
        for (Atom u : atoms)
            if (rng() % 2) part.insert(u);
        AtomSet x = rng() % 2 ? AtomSet::finite(part) : AtomSet::cofinite(part);

        // supp(p . x) = p(supp(x))
        Perm p = compose(transpose(atoms[0], atoms[1]), transpose(atoms[2], atoms[3]));
        CHECK(supp_set(act_set(p, x)) == act_vec(p, supp_set(x)));

        // least support: every claimed atom moves x when swapped with a
        // fresh atom; atoms outside do not
        SupportReport report = verify_least_support(
            x, supp_set(x), [](const Perm& q, const AtomSet& z) { return act_set(q, z); },
            AtomVec(atoms), rng());
        CHECK(report.ok());
    }
}
