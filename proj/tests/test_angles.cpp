#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tri3/angles.hpp"
#include "tri3/census.hpp"
#include "tri3/isosig.hpp"
#include "tri3/skeleton.hpp"

using namespace tri3;

namespace {

bool cusped(const Triangulation& t) {
    for (const auto& v : compute_skeleton(t).vertices)
        if (v.link.type != LinkType::Torus && v.link.type != LinkType::KleinBottle) return false;
    return true;
}

std::vector<Triangulation> cusped_census(std::size_t max_n, bool orientable) {
    std::vector<Triangulation> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (const auto& sig : enumerate_census({n, true, orientable, false}, 2)) {
            Triangulation t = from_isosig(sig);
            if (cusped(t)) out.push_back(t);
        }
    return out;
}

std::vector<AngleStructure> oracle_vertices(const Triangulation& t) {
    ConeProblem p = angle_system(t);
    std::vector<AngleStructure> out;
    for (const Ray& r : oracles::brute_force_rays(p.dim, p.rows)) {
        const Integer& z = r.v.back();
        if (z == 0) continue;
        AngleStructure s;
        for (std::size_t i = 0; i + 1 < r.v.size(); ++i) s.angles.emplace_back(r.v[i], z);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("angle system shape and preconditions") {
    CHECK_THROWS_AS(angle_system(fixtures::rp3()), PreconditionError);
    CHECK_THROWS_AS(angle_system(fixtures::single_tet()), PreconditionError);
    auto cusps = cusped_census(2, true);
    REQUIRE(!cusps.empty());
    std::size_t equilateral = 0;
    for (const auto& t : cusps) {
        if (t.size() != 2) continue;
        ConeProblem p = angle_system(t);
        CHECK(p.dim == 7);
        // equilateral structure
        AngleStructure eq;
        eq.angles.assign(6, Rational(1, 3));
        // holds exactly when every edge has degree 6
        if (satisfies_angle_equations(t, eq)) ++equilateral;
        CHECK_FALSE(eq.taut());
        CHECK(eq.str() == "1/3 ; 1/3 ; 1/3 || 1/3 ; 1/3 ; 1/3");
    }
    CHECK(equilateral > 0);
}

TEST_CASE("vertex angle structures match a brute-force oracle") {
    for (bool orientable : {true, false}) {
        for (const auto& t : cusped_census(orientable ? 3 : 2, orientable)) {
            auto got = enumerate_vertex_angle_structures(t);
            CHECK(got == oracle_vertices(t));
            for (const auto& s : got) CHECK(satisfies_angle_equations(t, s));
        }
    }
}

TEST_CASE("taut enumeration equals filtered vertex structures") {
    std::size_t total = 0;
    for (bool orientable : {true, false}) {
        for (const auto& t : cusped_census(3, orientable)) {
            auto all = enumerate_vertex_angle_structures(t);
            std::erase_if(all, [](const AngleStructure& s) { return !s.taut(); });
            auto taut = enumerate_taut(t);
            CHECK(taut == all);
            total += taut.size();
        }
    }
    CHECK(total > 0);
}
