#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "tri3/census.hpp"
#include "tri3/constructions.hpp"
#include "tri3/highlevel.hpp"
#include "tri3/homology.hpp"
#include "tri3/isosig.hpp"
#include "tri3/skeleton.hpp"

using namespace tri3;

TEST_CASE("sphere recognition basics") {
    CHECK_FALSE(is_three_sphere(fixtures::rp3()));
    CHECK_FALSE(is_three_sphere(fixtures::single_tet()));
    CHECK(is_three_sphere(fixtures::two_tet_sphere()));
    CHECK(is_three_sphere(cone_boundary(fixtures::single_tet())));
    CHECK(is_three_sphere(from_isosig("bbcbcaccbhcbf")));
    CHECK_FALSE(is_three_sphere(from_isosig("bbcbcaccbhcbk")));
}

TEST_CASE("sphere recognition on inflated spheres") {
    std::mt19937 rng(11);
    Triangulation s3 = from_isosig("bbcbcaccbhcbf");
    for (int i = 0; i < 10; ++i) {
        Triangulation big = fixtures::inflate(s3, 3 + rng() % 6, rng);
        CHECK(is_three_sphere(fixtures::random_relabel(big, rng)));
    }
}

TEST_CASE("ball recognition") {
    CHECK(is_ball(fixtures::single_tet()));
    CHECK_FALSE(is_ball(fixtures::rp3()));
    Triangulation two;
    two.add_tetrahedra(2);
    CHECK_FALSE(is_ball(two));
    Triangulation glued;
    glued.add_tetrahedra(2);
    glued.join(0, 0, 1, Perm4());
    CHECK(is_ball(glued));
}

TEST_CASE("zero efficiency") {
    CHECK_FALSE(is_zero_efficient(fixtures::rp3()));
    CHECK_THROWS_AS(is_zero_efficient(fixtures::single_tet()), PreconditionError);
}

TEST_CASE("connected sum decomposition") {
    CHECK(connected_sum_decomposition(fixtures::two_tet_sphere()).total() == 0);
    auto rp3 = connected_sum_decomposition(fixtures::rp3());
    CHECK(rp3.total() == 1);
    for (const auto& s : rp3.summands) CHECK_FALSE(is_three_sphere(s));
    CHECK_THROWS_AS(connected_sum_decomposition(fixtures::single_tet()), PreconditionError);
}

TEST_CASE("recognition agrees with homology on the small census") {
    for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& sig : enumerate_census({n, true, true, true}, 2)) {
            Triangulation t = from_isosig(sig);
            bool trivial = first_homology(t).trivial();
            // every closed orientable census manifold with trivial H1 up to n=3 is S³
            CHECK(is_three_sphere(t) == trivial);
            auto d = connected_sum_decomposition(t);
            if (trivial) CHECK(d.total() == 0);
            else CHECK(d.total() >= 1);
            for (const auto& s : d.summands) CHECK_FALSE(is_three_sphere(s));
        }
    }
}
