#include "doctest.h"
#include "fixtures.hpp"
#include "tri3/skeleton.hpp"

using namespace tri3;

TEST_CASE("skeleton of a single tetrahedron") {
    auto sk = compute_skeleton(fixtures::single_tet());
    CHECK(sk.vertices.size() == 4);
    CHECK(sk.edges.size() == 6);
    CHECK(sk.faces.size() == 4);
    REQUIRE(sk.boundary_components.size() == 1);
    CHECK(sk.boundary_components[0].euler_char == 2);
    for (const auto& v : sk.vertices) CHECK(v.link.type == LinkType::Disc);
    auto c = classify(fixtures::single_tet());
    CHECK(c.valid);
    CHECK(c.bounded);
    CHECK_FALSE(c.closed);
}

TEST_CASE("skeleton of projective space") {
    auto t = fixtures::rp3();
    auto sk = compute_skeleton(t);
    CHECK(sk.faces.size() == 4);
    CHECK(sk.vertices.size() - sk.edges.size() + sk.faces.size() - t.size() == 0);
    for (const auto& v : sk.vertices) CHECK(v.link.type == LinkType::Sphere);
    auto c = classify(t);
    CHECK(c.valid);
    CHECK(c.closed);
    CHECK(c.orientable);
    CHECK(c.connected);
}

TEST_CASE("two-tetrahedron sphere") {
    auto t = fixtures::two_tet_sphere();
    auto sk = compute_skeleton(t);
    CHECK(sk.vertices.size() == 4);
    CHECK(sk.edges.size() == 6);
    auto c = classify(t);
    CHECK(c.closed);
    CHECK(c.orientable);
}

TEST_CASE("reversed edge is invalid") {
    // Fold face 0 onto face 1 swapping vertices 2,3 and fixing edge... via a
    // perm that reverses edge 23.
    Triangulation t;
    t.add_tetrahedron();
    t.join(0, 0, 0, Perm4(1, 0, 3, 2));
    auto sk = compute_skeleton(t);
    bool any_invalid = false;
    for (const auto& e : sk.edges) any_invalid |= !e.valid;
    CHECK(any_invalid);
    CHECK_FALSE(classify(t).valid);
}
