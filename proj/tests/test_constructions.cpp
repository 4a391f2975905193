#include "doctest.h"
#include "fixtures.hpp"
#include "tri3/constructions.hpp"
#include "tri3/homology.hpp"
#include "tri3/skeleton.hpp"
#include "tri3/text_io.hpp"

using namespace tri3;

TEST_CASE("gluing table text round trip") {
    auto t = fixtures::rp3();
    std::string text = format_gluing_table(t);
    CHECK(text == "tets 2\n1(012) 1(013) 1(132) 1(032)\n0(012) 0(013) 0(132) 0(032)\n");
    CHECK(parse_gluing_table(text) == t);
    CHECK(parse_gluing_table("tets 1\n- - - -\n") == fixtures::single_tet());
    CHECK_THROWS_AS(parse_gluing_table("tets 1\n0(012) - - -\n"), InvalidInput);
    CHECK_THROWS_AS(parse_gluing_table("tets 2\n1(012) - - -\n- - - -\n"), InvalidInput);
    CHECK_THROWS_AS(parse_gluing_table("tets 1\n5(012) - - -\n"), InvalidInput);
    CHECK_THROWS_AS(parse_gluing_table("tet 1\n"), InvalidInput);
}

TEST_CASE("cone over the boundary of a tetrahedron") {
    auto s = cone_boundary(fixtures::single_tet());
    CHECK(s.size() == 5);
    auto c = classify(s);
    CHECK(c.valid);
    CHECK(c.closed);
    CHECK(c.orientable);
    CHECK(first_homology(s).trivial());
    CHECK_THROWS_AS(cone_boundary(fixtures::rp3()), PreconditionError);
    CHECK(cone_boundary(Triangulation()).empty());
}

TEST_CASE("barycentric subdivision") {
    auto b = barycentric_subdivide(fixtures::rp3());
    CHECK(b.size() == 48);
    auto c = classify(b);
    CHECK(c.valid);
    CHECK(c.closed);
    CHECK(c.orientable);
    CHECK(first_homology(b).str() == "Z_2");
    auto ball = barycentric_subdivide(fixtures::single_tet());
    CHECK(classify(ball).bounded);
    CHECK(compute_skeleton(ball).boundary_components.size() == 1);
    CHECK(compute_skeleton(ball).boundary_components[0].euler_char == 2);
    CHECK(24u * 1990u == 47760u);
}
