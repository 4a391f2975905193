#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tri3/cone.hpp"

using namespace tri3;

namespace {

std::vector<std::vector<Integer>> vecs(const std::vector<Ray>& rays) {
    std::vector<std::vector<Integer>> out;
    for (const auto& r : rays) out.push_back(r.v);
    return out;
}

Ray ray(std::vector<int> v) { return Ray(std::vector<Integer>(v.begin(), v.end())); }

}  // namespace

TEST_CASE("small cones") {
    CHECK(vecs(enumerate_extreme_rays({3, {}, {}, {}})) ==
          std::vector<std::vector<Integer>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(vecs(enumerate_extreme_rays({3, {{1, 1, -1}}, {}, {}})) ==
          std::vector<std::vector<Integer>>{{0, 1, 1}, {1, 0, 1}});
    CHECK(vecs(enumerate_extreme_rays({3, {{1, 1, -2}}, {}, {}})) ==
          std::vector<std::vector<Integer>>{{0, 2, 1}, {2, 0, 1}});
    CHECK_THROWS_AS(enumerate_extreme_rays({3, {{1, 1}}, {}, {}}), InvalidInput);
}

TEST_CASE("adjacency examples") {
    std::vector<Ray> two{ray({1, 0, 1}), ray({0, 1, 1})};
    CHECK(adjacent(two, two[0], two[1]));
    std::vector<Ray> three{ray({1, 0, 1}), ray({0, 1, 1}), ray({1, 1, 0})};
    CHECK_FALSE(adjacent(three, three[0], three[1]));
    std::vector<Ray> units{ray({1, 0, 0}), ray({0, 1, 0}), ray({0, 0, 1})};
    CHECK(adjacent(units, units[0], units[1]));
    CHECK_THROWS_AS(adjacent(two, two[0], ray({1, 1, 1})), InvalidInput);
}

TEST_CASE("double description matches brute force and trie matches scan") {
    std::mt19937 rng(2024);
    int systems = 0;
    std::size_t trie_checks = 0;
    for (int trial = 0; trial < 600; ++trial) {
        std::size_t d = 1 + rng() % 10, m = rng() % 7;
        std::vector<std::vector<Integer>> a(m, std::vector<Integer>(d));
        for (auto& row : a)
            for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        EnumerationOptions opts;
        opts.on_cone = [&](std::size_t, const std::vector<Ray>& rays) {
            RayTrie trie(d);
            for (const auto& r : rays) trie.insert(r.support);
            for (std::size_t i = 0; i < rays.size(); ++i)
                for (std::size_t j = i + 1; j < rays.size(); ++j) {
                    ++trie_checks;
                    REQUIRE(!trie.has_other_within(rays[i].support, rays[j].support) == adjacent_scan(rays, i, j));
                }
        };
        auto got = enumerate_extreme_rays({d, a, {}, {}}, opts);
        auto expect = oracles::brute_force_rays(d, a);
        CAPTURE(trial);
        CHECK(vecs(got) == vecs(expect));
        ++systems;
    }
    CHECK(systems >= 500);
    CHECK(trie_checks > 0);
}
