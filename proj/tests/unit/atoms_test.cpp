#include <doctest.h>

#include <stdexcept>

#include <random>

#include "nominal/atom.hpp"
#include "nominal/perm.hpp"

using namespace nominal;

TEST_CASE("fresh atoms are pairwise distinct and session-unique") {
    CHECK(fresh_atoms(0).empty());

    auto batch = fresh_atoms(2);
    REQUIRE(batch.size() == 2);
    CHECK(batch[0] != batch[1]);

    Atom one = fresh_atom();
    Atom two = fresh_atom();
    CHECK(one != two);
    CHECK(one != batch[0]);
    CHECK(one != batch[1]);
}

TEST_CASE("transpose swaps its pair and fixes everything else") {
    auto atoms = fresh_atoms(3);
    Atom a = atoms[0], b = atoms[1], c = atoms[2];

    Perm t = transpose(a, b);
    CHECK(t(a) == b);
    CHECK(t(b) == a);
    CHECK(t(c) == c);

    CHECK(transpose(a, a).is_identity());
}

TEST_CASE("composition, inverse and canonical form") {
    auto atoms = fresh_atoms(3);
    Atom a = atoms[0], b = atoms[1], c = atoms[2];

    CHECK(compose(transpose(a, b), transpose(a, b)).is_identity());
    CHECK(inverse(transpose(a, b)) == transpose(a, b));

    // compose applies right to left: check pointwise against the explicit
    // function composition on {a, b, c}
    Perm p = compose(transpose(a, b), transpose(b, c));
    auto direct = [&](Atom x) { return transpose(a, b)(transpose(b, c)(x)); };
    for (Atom x : {a, b, c}) CHECK(p(x) == direct(x));

    // no fixed points stored in any result
    for (const auto& [from, to] : p.moves()) CHECK(from != to);
    for (const auto& [from, to] : compose(p, p.inverse()).moves()) CHECK(from != to);
}

TEST_CASE("group laws on random words of transpositions") {
    auto atoms = fresh_atoms(6);
    std::mt19937_64 rng(42);
    auto random_perm = [&]() {
        Perm p;
        for (int i = 0; i < 4; ++i) {
            Atom x = atoms[rng() % atoms.size()];
            Atom y = atoms[rng() % atoms.size()];
            p = compose(p, transpose(x, y));
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Perm p = random_perm(), q = random_perm(), r = random_perm();
        CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
        CHECK(compose(p, Perm::identity()) == p);
        CHECK(compose(Perm::identity(), p) == p);
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(compose(p.inverse(), p).is_identity());
    }
}

TEST_CASE("perm_order is the least power reaching the identity") {
    auto atoms = fresh_atoms(5);
    Atom a = atoms[0], b = atoms[1], c = atoms[2], d = atoms[3], e = atoms[4];

    CHECK(perm_order(Perm::identity()) == 1);
    CHECK(perm_order(transpose(a, b)) == 2);
    CHECK(perm_order(Perm::cycle({a, b, c})) == 3);

    // (a b c)(d e) has order lcm(3, 2) = 6
    Perm p = compose(Perm::cycle({a, b, c}), transpose(d, e));
    std::uint64_t m = perm_order(p);
    CHECK(m == 6);
    Perm power = Perm::identity();
    for (std::uint64_t i = 1; i < m; ++i) {
        power = compose(p, power);
        CHECK_FALSE(power.is_identity());
    }
    CHECK(compose(p, power).is_identity());
}

TEST_CASE("cycle notation") {
    auto atoms = fresh_atoms(5);
    Atom a = atoms[0], b = atoms[1], c = atoms[2];
    set_atom_label(a, "a");
    set_atom_label(b, "b");
    set_atom_label(c, "c");

    CHECK(Perm::identity().to_string() == "()");
    CHECK(transpose(a, b).to_string() == "(a b)");
    CHECK(Perm::cycle({a, b, c}).to_string() == "(a b c)");
    CHECK(compose(transpose(a, b), Perm::cycle({c, atoms[3], atoms[4]})).to_string() ==
          "(a b)(" + atom_name(c) + " " + atom_name(atoms[3]) + " " + atom_name(atoms[4]) + ")");
}

TEST_CASE("sample_fix fixes the fixed set and is reproducible") {
    auto atoms = fresh_atoms(6);
    AtomVec fixed{atoms[0], atoms[1]};
    AtomVec pool(atoms);

    CHECK(sample_fix(fixed, pool, 0, 3).empty());

    auto perms = sample_fix(fixed, pool, 10, 3);
    REQUIRE(perms.size() == 10);
    bool any_nonid = false;
    for (const Perm& p : perms) {
        CHECK(p(atoms[0]) == atoms[0]);
        CHECK(p(atoms[1]) == atoms[1]);
        any_nonid = any_nonid || !p.is_identity();
    }
    CHECK(any_nonid);

    CHECK(sample_fix(fixed, pool, 10, 3) == perms);       // same seed, same draw
    CHECK(sample_fix(fixed, pool, 10, 4) != perms);       // different seed
    CHECK(sample_fix({}, pool, 3, 9).size() == 3);        // empty fixed set is fine
}

TEST_CASE("from_moves rejects non-bijective tables") {
    auto atoms = fresh_atoms(3);
    std::map<Atom, Atom> not_injective{{atoms[0], atoms[2]}, {atoms[1], atoms[2]}};
    CHECK_THROWS_AS(Perm::from_moves(not_injective), std::invalid_argument);

    std::map<Atom, Atom> domain_mismatch{{atoms[0], atoms[1]}};
    CHECK_THROWS_AS(Perm::from_moves(domain_mismatch), std::invalid_argument);
}
