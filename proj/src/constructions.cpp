#include "tri3/constructions.hpp"

#include <map>

namespace tri3 {

Triangulation cone_boundary(const Triangulation& tri) {
    if (tri.empty()) return tri;
    Triangulation out = tri;
    // cone[(t, f)] = new tetrahedron over boundary face (t, f); its vertices
    // 0..2 are the face's vertices in increasing order and vertex 3 is the apex.
    std::map<std::pair<std::size_t, int>, std::size_t> cone;
    for (std::size_t t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!tri.is_glued(t, f)) cone[{t, f}] = out.add_tetrahedron();
    if (cone.empty()) throw PreconditionError("cone_boundary needs a boundary");

    auto face_vertices = [](int f) {
        std::array<int, 3> v{};
        int k = 0;
        for (int u = 0; u < 4; ++u)
            if (u != f) v[k++] = u;
        return v;
    };
    auto index_in = [](const std::array<int, 3>& v, int x) {
        for (int k = 0; k < 3; ++k)
            if (v[k] == x) return k;
        return -1;
    };

    for (const auto& [slot, c] : cone) {
        auto [t, f] = slot;
        auto fv = face_vertices(f);
        out.join(c, 3, t, Perm4(fv[0], fv[1], fv[2], f));
        for (int k = 0; k < 3; ++k) {
            if (out.is_glued(c, k)) continue;
            // Edge of the face opposite its k-th vertex; walk around it to the
            // other boundary face containing it.
            int w = fv[k];
            int x = fv[(k + 1) % 3], y = fv[(k + 2) % 3];
            std::size_t cur_t = t;
            Perm4 pi(x, y, w, f);
            for (std::size_t steps = 0;; ++steps) {
                const auto& g = tri.gluing(cur_t, pi[2]);
                if (!g) break;
                if (steps > 6 * tri.size()) throw PreconditionError("cone_boundary: invalid boundary edge");
                cur_t = g->tet;
                pi = g->perm * pi * Perm4::swap(2, 3);
            }
            std::size_t c2 = cone.at({cur_t, pi[2]});
            auto fv2 = face_vertices(pi[2]);
            std::array<int, 4> img{};
            img[index_in(fv, x)] = index_in(fv2, pi[0]);
            img[index_in(fv, y)] = index_in(fv2, pi[1]);
            img[k] = index_in(fv2, pi[3]);
            img[3] = 3;
            if (c2 == c && img[k] == k) throw PreconditionError("cone_boundary: invalid boundary edge");
            out.join(c, k, c2, Perm4(img[0], img[1], img[2], img[3]));
        }
    }
    return out;
}

Triangulation barycentric_subdivide(const Triangulation& tri) {
    // Sub-tetrahedron (t, s): vertex i is the barycentre of original vertices
    // s[0..i] for i < 3, and vertex 3 is the barycentre of the tetrahedron.
    Triangulation out(24 * tri.size());
    auto id = [](std::size_t t, const Perm4& s) { return 24 * t + static_cast<std::size_t>(s.index()); };
    for (std::size_t t = 0; t < tri.size(); ++t) {
        for (const Perm4& s : Perm4::all()) {
            std::size_t me = id(t, s);
            for (int i = 0; i < 3; ++i) {
                if (out.is_glued(me, i)) continue;
                out.join(me, i, id(t, s * Perm4::swap(i, i + 1)), Perm4());
            }
            const auto& g = tri.gluing(t, s[3]);
            if (g && !out.is_glued(me, 3)) out.join(me, 3, id(g->tet, g->perm * s), Perm4());
        }
    }
    return out;
}

}  // namespace tri3
