#include <doctest.h>

#include <stdexcept>

#include "nominal/text.hpp"

using namespace nominal;

TEST_CASE("binder reuses atoms per label") {
    text::Binder b;
    Atom a1 = b.bind("a");
    Atom a2 = b.bind("a");
    Atom c = b.bind("c");
    CHECK(a1 == a2);
    CHECK(a1 != c);
    CHECK(atom_name(a1) == "a");

    AtomVec s = b.bind_list("a, c ,d");
    CHECK(s.size() == 3);
    CHECK(s.contains(a1));
    CHECK(b.bind_list("").empty());
}

TEST_CASE("set, permutation and function parsing round-trips") {
    text::Binder b;
    AtomVec s = text::parse_atom_set("{a,b}", b);
    CHECK(s.to_string() == "{a,b}");
    CHECK(text::parse_atom_set("{}", b).empty());

    Perm p = text::parse_perm("(a b)", b);
    CHECK(p.to_string() == "(a b)");
    CHECK(text::parse_perm("()", b).is_identity());
    Perm q = text::parse_perm("(a b)(c d e)", b);
    CHECK(q.to_string() == "(a b)(c d e)");

    AtomFun f = text::parse_atom_fun("fun{a->b, b->a; tail=id}", b);
    CHECK(f.to_string() == "fun{a->b, b->a; tail=id}");
    AtomFun g = text::parse_atom_fun("fun{a->a; tail=const a}", b);
    CHECK(g == AtomFun::constant(b.bind("a")));

    CHECK_THROWS_AS(text::parse_atom_set("{a", b), ParseError);
    CHECK_THROWS_AS(text::parse_atom_fun("fun{a->b tail=id}", b), ParseError);
    CHECK_THROWS_AS(text::parse_perm("a b", b), ParseError);
}

TEST_CASE("map parsing") {
    text::Binder b;
    auto m1 = text::parse_map("id", b);
    CHECK(m1.to_string() == "id");

    auto m2 = text::parse_map("cup{a,b}", b);
    CHECK(m2.support() == b.bind_list("a,b"));

    auto m3 = text::parse_map("(cup{a} | perm((a b)))", b);
    CHECK(m3.support() == b.bind_list("a,b"));
    AtomVec z = m3(AtomVec{b.bind("a")});
    CHECK(z == b.bind_list("a,b"));

    auto m4 = text::parse_map("(id ; img(fun{a->a; tail=const a}))", b);
    CHECK(m4.support() == b.bind_list("a"));

    CHECK_THROWS_AS(text::parse_map("(id & id)", b), ParseError);
    CHECK_THROWS_AS(text::parse_map("cup{a} extra", b), ParseError);
}
