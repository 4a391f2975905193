#include "doctest.h"
#include "fixtures.hpp"
#include "tri3/homology.hpp"
#include "tri3/isosig.hpp"

using namespace tri3;

TEST_CASE("signatures are relabelling invariant") {
    std::mt19937 rng(7);
    for (const auto& t : {fixtures::rp3(), fixtures::single_tet(), fixtures::two_tet_sphere()}) {
        std::string s = isosig(t);
        for (int i = 0; i < 100; ++i) CHECK(isosig(fixtures::random_relabel(t, rng)) == s);
        auto back = from_isosig(s);
        CHECK(isosig(back) == s);
        CHECK(back.size() == t.size());
    }
}

TEST_CASE("signature round trips and errors") {
    CHECK(isosig(Triangulation()) == "b");
    CHECK(from_isosig("b").empty());
    CHECK(first_homology(from_isosig(isosig(fixtures::rp3()))).str() == "Z_2");
    CHECK_THROWS_AS(from_isosig("!!!"), InvalidInput);
    CHECK_THROWS_AS(from_isosig("c"), InvalidInput);
    CHECK_THROWS_AS(from_isosig(""), InvalidInput);
    CHECK_FALSE(is_isomorphic(fixtures::single_tet(), Triangulation()));
    CHECK_FALSE(is_isomorphic(fixtures::rp3(), fixtures::two_tet_sphere()));
    Triangulation two;
    two.insert(fixtures::rp3());
    two.insert(fixtures::single_tet());
    Triangulation swapped;
    swapped.insert(fixtures::single_tet());
    swapped.insert(fixtures::rp3());
    CHECK(is_isomorphic(two, swapped));
    CHECK(from_isosig(isosig(two)).component_count() == 2);
}
