#include <doctest.h>

#include <stdexcept>

#include <random>

#include "nominal/counting.hpp"
#include "nominal/fun.hpp"
#include "nominal/oracle.hpp"

using namespace nominal;

TEST_CASE("closed-form counts") {
    using counting::count_supported;

    CHECK(count_supported(Kind::Atoms, 3) == 3);
    CHECK(count_supported(Kind::Subsets, 2) == 8);
    CHECK(count_supported(Kind::InjTuples, 2) == 5);  // 1 + 2 + 2
    CHECK(count_supported(Kind::InjTuples, 3) == 16);  // 1 + 3 + 6 + 6
    CHECK(count_supported(Kind::FunAA, 0) == 1);
    CHECK(count_supported(Kind::FunAA, 1) == 2);
    CHECK(count_supported(Kind::FunAA, 2) == 12);
    CHECK(count_supported(Kind::FunAA, 3) == 108);
    CHECK(count_supported(Kind::FunASet, 0) == 4);
    CHECK(count_supported(Kind::FunASet, 1) == 32);
    CHECK(count_supported(Kind::FunASet, 2) == 1024);
    CHECK(count_supported(Kind::FunATuple, 0, 2) == 1);
    CHECK(count_supported(Kind::FunATuple, 1, 2) == 4);
    CHECK(count_supported(Kind::FunATuple, 2, 2) == 144);

    // counts are nondecreasing in the support size
    for (Kind kind : {Kind::Atoms, Kind::Subsets, Kind::InjTuples, Kind::FunAA, Kind::FunASet}) {
        for (std::size_t s = 0; s + 1 <= 4; ++s)
            CHECK(count_supported(kind, s) <= count_supported(kind, s + 1));
    }

    // the stated bounds hold: at most |S| atoms, at most 2^{|S|+1} subsets
    for (std::size_t s = 0; s <= 4; ++s) {
        CHECK(count_supported(Kind::Atoms, s) <= s);
        CHECK(count_supported(Kind::Subsets, s) <= (std::uint64_t{1} << (s + 1)));
    }
}

TEST_CASE("cross-check examples") {
    {
        auto atoms = fresh_atoms(2);
        auto report = counting::cross_check(Kind::Subsets, AtomVec(atoms), 6);
        CHECK(report.formula_count == 8);
        CHECK(report.symbolic_count == 8);
        CHECK(report.oracle_count == 8);
        CHECK(report.ok());
    }
    {
        auto atoms = fresh_atoms(1);
        auto report = counting::cross_check(Kind::FunAA, AtomVec(atoms), 5);
        CHECK(report.formula_count == 2);
        CHECK(report.symbolic_count == 2);
        CHECK(report.oracle_count == 2);
        CHECK(report.ok());
    }
    {
        auto report = counting::cross_check(Kind::InjTuples, AtomVec{}, 4);
        CHECK(report.formula_count == 1);  // only the empty tuple is equivariant
        CHECK(report.ok());
    }
}

TEST_CASE("cross-check rejects too-small universes") {
    auto atoms = fresh_atoms(2);
    CHECK_THROWS_AS(counting::cross_check(Kind::Subsets, AtomVec(atoms), 5),
                    std::invalid_argument);
    // function kinds additionally need |S|+3
    CHECK_THROWS_AS(counting::cross_check(Kind::FunAA, AtomVec{}, 2), std::invalid_argument);

    // the oracle itself refuses set/function kinds below 2|S|+2
    oracle::FiniteModel m = oracle::FiniteModel::containing(AtomVec(atoms), 5);
    CHECK_THROWS_AS(oracle::enumerate_supported(m, Kind::Subsets, AtomVec(atoms)),
                    std::invalid_argument);
    CHECK(oracle::enumerate_supported(m, Kind::Atoms, AtomVec(atoms)).size() == 2);
}

TEST_CASE("oracle support checking") {
    auto atoms = fresh_atoms(4);
    oracle::FiniteModel m{AtomVec(atoms)};
    Atom a0 = atoms[0], a1 = atoms[1];

    CHECK(oracle::check_support(m, oracle::ModelSet{AtomVec{a0, a1}}, AtomVec{a0, a1}));
    CHECK_FALSE(oracle::check_support(m, oracle::ModelSet{AtomVec{a0, a1}}, AtomVec{a0}));
    CHECK(oracle::check_support(m, oracle::ModelSet{m.universe()}, AtomVec{}));

    // constant function: supported by its value, not by less
    std::vector<Atom> const_values(m.size(), a0);
    oracle::ModelElem const_fn = oracle::ModelFun{const_values};
    CHECK(oracle::check_support(m, const_fn, AtomVec{a0}));
    CHECK_FALSE(oracle::check_support(m, const_fn, AtomVec{}));
}

TEST_CASE("oracle enumerations at small sizes") {
    {
        auto atoms = fresh_atoms(1);
        oracle::FiniteModel m = oracle::FiniteModel::containing(AtomVec(atoms), 4);
        auto subsets = oracle::enumerate_supported(m, Kind::Subsets, AtomVec(atoms));
        CHECK(subsets.size() == 4);  // {}, {a}, universe\{a}, universe
    }
    {
        auto atoms = fresh_atoms(0);
        oracle::FiniteModel m = oracle::FiniteModel::containing(AtomVec{}, 3);
        auto funs = oracle::enumerate_supported(m, Kind::FunAA, AtomVec{});
        REQUIRE(funs.size() == 1);  // only the identity commutes with everything
        const auto& f = std::get<oracle::ModelFun>(funs[0]);
        CHECK(f.values == m.universe().items());
    }
    {
        auto atoms = fresh_atoms(2);
        oracle::FiniteModel m = oracle::FiniteModel::containing(AtomVec(atoms), 5);
        auto supported = oracle::enumerate_supported(m, Kind::Atoms, AtomVec(atoms));
        REQUIRE(supported.size() == 2);
        CHECK(std::get<Atom>(supported[0]) == atoms[0]);
        CHECK(std::get<Atom>(supported[1]) == atoms[1]);
    }
}

TEST_CASE("invariance under generators implies invariance under their products") {
    auto atoms = fresh_atoms(5);
    oracle::FiniteModel m{AtomVec(atoms)};
    AtomVec s{atoms[0]};

    std::mt19937_64 rng(43);
    auto elems = oracle::enumerate_supported(m, Kind::Subsets, s);
    auto gens = m.fix_generators(s);
    REQUIRE_FALSE(gens.empty());
    for (int trial = 0; trial < 100; ++trial) {
        Perm product;
        for (int i = 0; i < 4; ++i) product = compose(product, gens[rng() % gens.size()]);
        const auto& e = elems[rng() % elems.size()];
        CHECK(oracle::act_elem(m, product, e) == e);
    }
}

TEST_CASE("oracle counts stabilize once the universe is large enough") {
    auto atoms = fresh_atoms(1);
    AtomVec s(atoms);
    for (Kind kind : {Kind::Subsets, Kind::FunAA}) {
        std::size_t base = counting::min_universe(kind, s.size());
        std::vector<std::size_t> counts;
        for (std::size_t n = base; n < base + 3; ++n) {
            oracle::FiniteModel m = oracle::FiniteModel::containing(s, n);
            counts.push_back(oracle::enumerate_supported(m, kind, s).size());
        }
        CHECK(counts[0] == counts[1]);
        CHECK(counts[1] == counts[2]);
        CHECK(counts[0] == counting::count_supported(kind, s.size()));
    }
}

TEST_CASE("no supported total order on the atoms") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto atoms = fresh_atoms(n);
        oracle::FiniteModel m{AtomVec(atoms)};
        for (std::size_t k = 0; k + 2 <= n && k <= 2; ++k) {
            AtomVec s(std::vector<Atom>(atoms.begin(), atoms.begin() + k));
            CHECK(oracle::no_total_order_on_atoms(m, s));
        }
    }
    // precondition: at least two atoms must be free
    auto atoms = fresh_atoms(3);
    oracle::FiniteModel m{AtomVec(atoms)};
    CHECK_THROWS_AS(oracle::no_total_order_on_atoms(m, AtomVec{atoms[0], atoms[1]}),
                    std::invalid_argument);
}

TEST_CASE("derived counts for injective-tuple-valued functions") {
    // fixed arity: formula matches the symbolic enumeration
    for (std::size_t s = 0; s <= 2; ++s) {
        AtomVec support(fresh_atoms(s));
        for (std::size_t n = 1; n <= 3; ++n) {
            CHECK(counting::count_inj_tuple_funs(s, n) ==
                  enumerate_injective_tuple_funs(support, n).size());
        }
    }
    CHECK(counting::count_inj_tuple_funs(1, 1) == 2);
    CHECK(counting::count_inj_tuple_funs(2, 2) == 24);
    CHECK(counting::count_inj_tuple_funs(1, 2) == 0);  // no injective pair over one atom

    // mixed arity: the full function space into injective tuples, against
    // the oracle
    CHECK(counting::count_funs_to_inj_tuples(0) == 2);  // a |-> () and a |-> (a)
    CHECK(counting::count_funs_to_inj_tuples(1) == 10);
    for (std::size_t s = 0; s <= 2; ++s) {
        AtomVec support(fresh_atoms(s));
        std::size_t n = counting::min_universe(Kind::FunATuple, s);
        oracle::FiniteModel m = oracle::FiniteModel::containing(support, n);
        CHECK(oracle::enumerate_inj_tuple_valued_funs(m, support).size() ==
              counting::count_funs_to_inj_tuples(s));
    }
}

TEST_CASE("injective tuple functions agree with the oracle at small sizes") {
    auto atoms = fresh_atoms(1);
    AtomVec s(atoms);
    std::size_t n = counting::min_universe(Kind::FunATuple, s.size());
    oracle::FiniteModel m = oracle::FiniteModel::containing(s, n);

    auto symbolic = enumerate_injective_tuple_funs(s, 2);
    std::vector<oracle::ModelElem> embedded;
    for (const TupleFun& f : symbolic) embedded.push_back(oracle::embed(m, f));
    std::sort(embedded.begin(), embedded.end());

    auto concrete = oracle::enumerate_supported(m, Kind::FunATuple, s, 2, true);
    CHECK(embedded == concrete);
}
