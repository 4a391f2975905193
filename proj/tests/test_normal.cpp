#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "tri3/census.hpp"
#include "tri3/homology.hpp"
#include "tri3/isosig.hpp"
#include "tri3/normal.hpp"
#include "tri3/skeleton.hpp"

using namespace tri3;

namespace {

NormalSurface project(const NormalSurface& s) {
    // Standard (almost normal) -> quad (quad-oct) by dropping triangles.
    NormalSurface out;
    out.system = has_octagons(s.system) ? CoordSystem::QuadOct : CoordSystem::Quad;
    for (std::size_t t = 0; t < s.tetrahedra(); ++t) {
        for (int q = 0; q < 3; ++q) out.coords.push_back(s.quad(t, q));
        if (has_octagons(s.system))
            for (int k = 0; k < 3; ++k) out.coords.push_back(s.octagon(t, k));
    }
    return out;
}

}  // namespace

TEST_CASE("projective space surfaces") {
    auto t = fixtures::rp3();
    auto all = enumerate_vertex_surfaces(t, CoordSystem::Standard);
    CHECK(all.size() == 5);
    std::vector<std::string> chi1;
    for (const auto& s : all) {
        auto a = analyze(t, s);
        if (a.euler_char == 1) {
            chi1.push_back(s.str());
            CHECK(a.connected());
            CHECK_FALSE(a.components[0].orientable);
            auto d = analyze(t, s.scaled(2));
            CHECK(d.euler_char == 2);
            CHECK(d.connected());
        }
    }
    std::sort(chi1.begin(), chi1.end());
    CHECK(chi1 == std::vector<std::string>{"0 0 0 0 ; 0 0 1 || 0 0 0 0 ; 0 0 1", "0 0 0 0 ; 0 1 0 || 0 0 0 0 ; 0 1 0"});

    for (const auto& q : enumerate_vertex_surfaces(t, CoordSystem::Quad)) {
        auto s = reconstruct_standard(t, q);
        if (analyze(t, s).euler_char > 0) CHECK(std::find(all.begin(), all.end(), s) != all.end());
    }
    auto sphere = find_nontrivial_normal_sphere(t);
    REQUIRE(sphere);
    CHECK(analyze(t, *sphere).is_sphere());
    CHECK_FALSE(sphere->vertex_linking());
    auto crushed = crush(t, *sphere);
    CHECK(crushed.size() < 2);
    CHECK((classify(crushed).closed || crushed.empty()));
}

TEST_CASE("single tetrahedron quad surfaces") {
    CHECK(matching_system(fixtures::single_tet(), CoordSystem::Quad).rows.empty());
    CHECK(enumerate_vertex_surfaces(fixtures::single_tet(), CoordSystem::Quad).size() == 3);
    CHECK_THROWS_AS(find_nontrivial_normal_sphere(fixtures::single_tet()), PreconditionError);
}

TEST_CASE("surface invariants across the small census") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& sig : enumerate_census({n, true, false, true})) {
            Triangulation t = from_isosig(sig);
            CAPTURE(sig);
            auto std_surfaces = enumerate_vertex_surfaces(t, CoordSystem::Standard);
            auto quad_surfaces = enumerate_vertex_surfaces(t, CoordSystem::Quad);
            CHECK(quad_surfaces.size() <= std_surfaces.size());
            for (const auto& s : std_surfaces) {
                CHECK(satisfies_matching(t, s));
                CHECK(satisfies_matching(t, project(s)));
                CHECK(euler_char_linear(t, s) == analyze(t, s).euler_char);
            }
            for (const auto& q : quad_surfaces) {
                auto s = reconstruct_standard(t, q);
                CHECK(satisfies_matching(t, s));
                CHECK(euler_char_linear(t, s) == analyze(t, s).euler_char);
            }
            if (n <= 2) {
                for (const auto& s : enumerate_vertex_surfaces(t, CoordSystem::StandardAlmostNormal)) {
                    CHECK(satisfies_matching(t, s));
                    CHECK(satisfies_matching(t, project(s)));
                    CHECK(euler_char_linear(t, s) == analyze(t, s).euler_char);
                }
                for (const auto& q : enumerate_vertex_surfaces(t, CoordSystem::QuadOct)) {
                    auto s = reconstruct_standard(t, q);
                    CHECK(satisfies_matching(t, s));
                }
            }
            // Vertex links are normal.
            Skeleton sk = compute_skeleton(t);
            for (const auto& v : sk.vertices) {
                NormalSurface link{CoordSystem::Standard, std::vector<Integer>(7 * n, 0)};
                for (auto [tt, vv] : v.corners) link.coords[7 * tt + vv] = 1;
                CHECK(satisfies_matching(t, link));
                auto a = analyze(t, link);
                CHECK(a.is_sphere());
                CHECK(a.vertex_linking);
            }
        }
}

TEST_CASE("crushing reduces size and keeps homology bookkeeping") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& sig : enumerate_census({n, true, true, true})) {
            Triangulation t = from_isosig(sig);
            auto s = find_nontrivial_normal_sphere(t);
            if (!s) continue;
            CAPTURE(sig);
            auto r = crush(t, *s);
            CHECK(r.size() < t.size());
            auto c = classify(r);
            CHECK((r.empty() || (c.valid && c.closed)));
            // Crushing may only delete S3 / RP3 / S2xS1 / L(3,1) summands.
            auto h0 = first_homology(t);
            std::size_t rank = 0, t2 = 0, t3 = 0;
            for (const auto& comp : r.components()) {
                auto h = first_homology(comp);
                rank += h.rank;
                t2 += h.t2;
                t3 += h.t3;
            }
            CHECK(rank <= h0.rank);
            CHECK(t2 <= h0.t2);
            CHECK(t3 <= h0.t3);
        }
}
