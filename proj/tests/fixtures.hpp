#pragma once

#include "tri3/triangulation.hpp"

namespace fixtures {

// Two tetrahedra glued into real projective space.
inline tri3::Triangulation rp3() {
    tri3::Triangulation t;
    t.add_tetrahedra(2);
    t.join(0, 0, 1, tri3::Perm4(1, 0, 3, 2));
    t.join(0, 1, 1, tri3::Perm4(1, 0, 3, 2));
    t.join(0, 2, 1, tri3::Perm4());
    t.join(0, 3, 1, tri3::Perm4());
    return t;
}

inline tri3::Triangulation single_tet() {
    tri3::Triangulation t;
    t.add_tetrahedron();
    return t;
}

// Two tetrahedra glued along all four faces by the identity: the 3-sphere.
inline tri3::Triangulation two_tet_sphere() {
    tri3::Triangulation t;
    t.add_tetrahedra(2);
    for (int f = 0; f < 4; ++f) t.join(0, f, 1, tri3::Perm4());
    return t;
}

}  // namespace fixtures

#include <algorithm>
#include <numeric>
#include <random>

namespace fixtures {

inline tri3::Triangulation random_relabel(const tri3::Triangulation& t, std::mt19937& rng) {
    std::vector<std::size_t> tets(t.size());
    std::iota(tets.begin(), tets.end(), std::size_t{0});
    std::shuffle(tets.begin(), tets.end(), rng);
    std::vector<tri3::Perm4> perms(t.size());
    for (auto& p : perms) p = tri3::Perm4::from_index(static_cast<int>(rng() % 24));
    return t.relabeled(tets, perms);
}

}  // namespace fixtures

#include "tri3/moves.hpp"

namespace fixtures {

// Random 2-3 moves until the triangulation has `target` tetrahedra.
inline tri3::Triangulation inflate(tri3::Triangulation t, std::size_t target, std::mt19937& rng) {
    while (t.size() < target) {
        auto ups = tri3::enumerate_moves(t, {tri3::MoveType::Pachner23});
        if (ups.empty()) break;
        t = tri3::perform_move(t, ups[rng() % ups.size()]);
    }
    return t;
}

}  // namespace fixtures
