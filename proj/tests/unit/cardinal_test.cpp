#include <doctest.h>

#include <stdexcept>

#include <set>

#include "nominal/cardinal.hpp"
#include "nominal/perm.hpp"

using namespace nominal;
using namespace nominal::cardinal;

TEST_CASE("pair encoding into the naturals") {
    CHECK(nat_pair_inject(0, 0) == 1);
    CHECK(nat_pair_inject(1, 2) == 18);
    CHECK(nat_pair_inject(2, 1) == 12);

    // injective on the full 11 x 11 grid
    std::set<std::uint64_t> values;
    for (std::uint64_t m = 0; m <= 10; ++m)
        for (std::uint64_t n = 0; n <= 10; ++n) values.insert(nat_pair_inject(m, n));
    CHECK(values.size() == 121);

    CHECK_THROWS_AS(nat_pair_inject(80, 80), std::overflow_error);
}

TEST_CASE("tagged encoding into the naturals") {
    // the offset separates the branches at n = 0
    CHECK(nat_bool_inject(0, false) != nat_bool_inject(0, true));
    CHECK(nat_bool_inject(3, false) == 16);  // 2^{3+1}

    std::set<std::uint64_t> values;
    for (std::uint64_t n = 0; n <= 10; ++n) {
        values.insert(nat_bool_inject(n, false));
        values.insert(nat_bool_inject(n, true));
    }
    CHECK(values.size() == 22);

    // the unshifted formula collides at n = 0
    CHECK(nat_bool_inject_literal(0, false) == nat_bool_inject_literal(0, true));
}

TEST_CASE("doubling injection from two distinguished elements") {
    auto atoms = fresh_atoms(22);
    Atom x1 = atoms[0], x2 = atoms[1];
    auto gen = [atoms](std::uint64_t i) { return Elem::atom(atoms[i % atoms.size()]); };

    CardWitness w = double_inject(Elem::atom(x1), Elem::atom(x2), gen, "double");
    CHECK(w.declared_support == AtomVec{x1, x2});

    // no collisions across 20 sampled base elements (40 domain points)
    std::set<std::string> images;
    for (std::uint64_t i = 0; i < 40; ++i) images.insert(w.mapping(w.domain_gen(i)).to_string());
    CHECK(images.size() == 40);

    // the two images of a fixed base element differ
    CHECK(w.mapping(Elem::tuple({Elem::atom(x1), Elem::nat(0)})) !=
          w.mapping(Elem::tuple({Elem::atom(x1), Elem::nat(1)})));

    CHECK_THROWS_AS(double_inject(Elem::atom(x1), Elem::atom(x1), gen, "bad"),
                    std::invalid_argument);
}

TEST_CASE("relation checks") {
    // reflexivity: the identity witness certifies |X| <= |X|
    CardWitness id = identity_witness("id", [](std::uint64_t i) { return Elem::nat(i); });
    CHECK(relation_check(Relation::Leq, id, 50, 7).ok);
    CHECK(relation_check(Relation::LeqStar, id, 50, 7).ok);

    CHECK(relation_check(Relation::Leq, nat_pair_witness(), 100, 7).ok);
    CHECK(relation_check(Relation::Leq, nat_bool_witness(), 100, 7).ok);

    // the literal unshifted encoding is caught
    CHECK_FALSE(relation_check(Relation::Leq, nat_bool_literal_witness(), 100, 7).ok);

    // transitivity instance: compose an inclusion with the pair encoding
    CardWitness incl;
    incl.kind = CardWitness::Kind::Injection;
    incl.name = "incl";
    incl.mapping = [](const Elem& x) { return Elem::tuple({x, Elem::nat(0)}); };
    incl.domain_gen = [](std::uint64_t i) { return Elem::nat(i % 23); };
    CardWitness composed = compose_witnesses(nat_pair_witness(), incl);
    CHECK(relation_check(Relation::Leq, composed, 100, 7).ok);

    // surjection via projection: |X| <=* |X x {0,1}|
    auto atoms = fresh_atoms(8);
    auto gen = [atoms](std::uint64_t i) { return Elem::atom(atoms[i % atoms.size()]); };
    CardWitness proj = projection_witness(gen, "proj");
    CHECK(relation_check(Relation::LeqStar, proj, 50, 7).ok);
}

TEST_CASE("witnesses are equivariant under permutations fixing their support") {
    auto atoms = fresh_atoms(10);
    Atom x1 = atoms[0], x2 = atoms[1];
    auto gen = [atoms](std::uint64_t i) { return Elem::atom(atoms[i % atoms.size()]); };

    CHECK(equivariance_check(double_inject(Elem::atom(x1), Elem::atom(x2), gen, "double"), 50, 3)
              .ok);
    CHECK(equivariance_check(projection_witness(gen, "proj"), 50, 3).ok);
    CHECK(equivariance_check(nat_pair_witness(), 50, 3).ok);
}

TEST_CASE("the forced images of a pair surjection clash") {
    auto atoms = fresh_atoms(3);
    ClashReport r = pair_surjection_clash(atoms[0], atoms[1], atoms[2]);
    CHECK(r.via_ab == Elem::tuple({Elem::atom(atoms[1]), Elem::atom(atoms[0])}));
    CHECK(r.via_cb == Elem::tuple({Elem::atom(atoms[1]), Elem::atom(atoms[2])}));
    CHECK_FALSE(r.consistent);
}
