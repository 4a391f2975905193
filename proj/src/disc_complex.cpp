#include "tri3/disc_complex.hpp"

#include <map>
#include <string>
#include <tuple>

#include "tri3/union_find.hpp"

namespace tri3 {

std::size_t PolygonComplex::add_polygon(int sides) {
    corner_offset_.push_back(corner_offset_.empty() ? 0 : corner_offset_.back() + sides_.back());
    sides_.push_back(sides);
    glued_.emplace_back(sides);
    return sides_.size() - 1;
}

void PolygonComplex::glue(std::size_t p, int i, std::size_t q, int j, bool reversed) {
    if (glued_[p][i] || glued_[q][j]) throw InvalidInput("polygon side glued twice");
    glued_[p][i] = SideGluing{q, j, reversed};
    glued_[q][j] = SideGluing{p, i, reversed};
}

PolygonComplex::Summary PolygonComplex::summarize() const {
    const std::size_t np = sides_.size();
    const std::size_t ncorners = np ? corner_offset_.back() + sides_.back() : 0;
    UnionFind corners(ncorners);
    UnionFind polys(np);
    std::vector<std::int64_t> edges_in(np, 0);
    std::vector<bool> boundary(np, false);
    for (std::size_t p = 0; p < np; ++p) {
        const int k = sides_[p];
        for (int i = 0; i < k; ++i) {
            const auto& g = glued_[p][i];
            if (!g) {
                ++edges_in[p];
                boundary[p] = true;
                continue;
            }
            // Count each glued pair once.
            if (std::tie(p, i) < std::tie(g->poly, g->side)) ++edges_in[p];
            polys.unite(p, g->poly);
            const int kq = sides_[g->poly];
            std::size_t a0 = corner_offset_[p] + i, a1 = corner_offset_[p] + (i + 1) % k;
            std::size_t b0 = corner_offset_[g->poly] + g->side;
            std::size_t b1 = corner_offset_[g->poly] + (g->side + 1) % kq;
            if (g->reversed) std::swap(b0, b1);
            corners.unite(a0, b0);
            corners.unite(a1, b1);
        }
    }
    // Orientation propagation.
    std::vector<int> orient(np, 0);
    std::vector<bool> comp_orientable(np, true);
    for (std::size_t s = 0; s < np; ++s) {
        if (orient[s]) continue;
        orient[s] = 1;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            std::size_t p = stack.back();
            stack.pop_back();
            for (int i = 0; i < sides_[p]; ++i) {
                const auto& g = glued_[p][i];
                if (!g) continue;
                int want = g->reversed ? orient[p] : -orient[p];
                if (!orient[g->poly]) {
                    orient[g->poly] = want;
                    stack.push_back(g->poly);
                } else if (orient[g->poly] != want) {
                    comp_orientable[polys.find(p)] = false;
                }
            }
        }
    }
    Summary out;
    std::map<std::size_t, std::size_t> comp_index;
    std::vector<bool> corner_seen(ncorners, false);
    for (std::size_t p = 0; p < np; ++p) {
        std::size_t root = polys.find(p);
        auto [it, fresh] = comp_index.try_emplace(root, out.components.size());
        if (fresh) out.components.emplace_back();
        Component& c = out.components[it->second];
        ++c.polygons;
        c.euler_char += 1 - edges_in[p];
        if (boundary[p]) c.has_boundary = true;
        for (int i = 0; i < sides_[p]; ++i) {
            std::size_t r = corners.find(corner_offset_[p] + i);
            if (!corner_seen[r]) {
                corner_seen[r] = true;
                ++c.euler_char;
            }
        }
    }
    for (auto& [root, idx] : comp_index) {
        out.components[idx].orientable = comp_orientable[root];
        out.euler_char += out.components[idx].euler_char;
    }
    return out;
}

namespace {

struct SideSpec {
    int face;
    int around;
    int from;
    int to;
};

// Vertex `a` of quad/octagon type q is 0; b = q+1; c < d the rest.
std::array<int, 4> quad_vertices(int q) {
    int b = q + 1;
    int c = -1, d = -1;
    for (int u = 1; u < 4; ++u) {
        if (u == b) continue;
        if (c < 0)
            c = u;
        else
            d = u;
    }
    return {0, b, c, d};
}

std::vector<SideSpec> triangle_sides(int v) {
    int x[3], k = 0;
    for (int u = 0; u < 4; ++u)
        if (u != v) x[k++] = u;
    return {{x[2], v, x[0], x[1]}, {x[0], v, x[1], x[2]}, {x[1], v, x[2], x[0]}};
}

std::vector<SideSpec> quad_sides(int q) {
    auto [a, b, c, d] = quad_vertices(q);
    return {{b, a, c, d}, {c, d, a, b}, {a, b, d, c}, {d, c, b, a}};
}

std::vector<SideSpec> octagon_sides(int q) {
    auto [a, b, c, d] = quad_vertices(q);
    return {{d, a, c, b}, {c, a, b, d}, {b, d, a, c}, {a, d, c, b},
            {c, b, d, a}, {d, b, a, c}, {a, c, b, d}, {b, c, d, a}};
}

struct SideRef {
    std::size_t disc;
    int side;
    int from;
};

}  // namespace

PolygonComplex assemble_disc_complex(const Triangulation& tri, const std::vector<DiscCounts>& discs) {
    if (discs.size() != tri.size()) throw InvalidInput("disc counts do not match tetrahedron count");
    PolygonComplex cx;
    // arcs[t][f][v] = sides sitting at successive positions outward from corner v in face f.
    std::vector<std::array<std::array<std::vector<SideRef>, 4>, 4>> arcs(tri.size());
    for (std::size_t t = 0; t < tri.size(); ++t) {
        const DiscCounts& dc = discs[t];
        int kinds = 0;
        for (int q = 0; q < 3; ++q) kinds += (dc.quad[q] != 0) + (dc.oct[q] != 0);
        if (kinds > 1)
            throw InvalidInput("tetrahedron " + std::to_string(t) + " holds incompatible quadrilateral/octagon types");
        for (int v = 0; v < 4; ++v) {
            if (dc.tri[v] < 0) throw InvalidInput("negative disc count");
            for (int f = 0; f < 4; ++f)
                if (f != v) arcs[t][f][v].resize(static_cast<std::size_t>(dc.tri[v]));
        }
        auto place = [&](std::size_t disc, int side, const SideSpec& s, std::size_t pos) {
            auto& slot = arcs[t][s.face][s.around];
            if (slot.size() <= pos) slot.resize(pos + 1, SideRef{SIZE_MAX, 0, 0});
            slot[pos] = SideRef{disc, side, s.from};
        };
        for (int v = 0; v < 4; ++v) {
            auto specs = triangle_sides(v);
            for (std::int64_t k = 0; k < dc.tri[v]; ++k) {
                std::size_t d = cx.add_polygon(3);
                for (int i = 0; i < 3; ++i) place(d, i, specs[i], static_cast<std::size_t>(k));
            }
        }
        for (int q = 0; q < 3; ++q) {
            for (int kind = 0; kind < 2; ++kind) {
                std::int64_t count = kind == 0 ? dc.quad[q] : dc.oct[q];
                if (count < 0) throw InvalidInput("negative disc count");
                auto specs = kind == 0 ? quad_sides(q) : octagon_sides(q);
                for (std::int64_t j = 0; j < count; ++j) {
                    std::size_t d = cx.add_polygon(static_cast<int>(specs.size()));
                    for (int i = 0; i < static_cast<int>(specs.size()); ++i) {
                        const SideSpec& s = specs[i];
                        bool near_side = (s.around == 0 || s.around == q + 1);
                        std::int64_t depth = near_side ? j : count - 1 - j;
                        place(d, i, s, static_cast<std::size_t>(dc.tri[s.around] + depth));
                    }
                }
            }
        }
    }
    for (std::size_t t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = tri.gluing(t, f);
            if (!g) continue;
            const int f2 = g->perm[f];
            if (std::make_pair(g->tet, f2) < std::make_pair(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                const auto& mine = arcs[t][f][v];
                const auto& theirs = arcs[g->tet][f2][g->perm[v]];
                if (mine.size() != theirs.size())
                    throw InvalidInput("normal arc counts disagree across a face of tetrahedron " +
                                       std::to_string(t));
                for (std::size_t pos = 0; pos < mine.size(); ++pos) {
                    const SideRef& a = mine[pos];
                    const SideRef& b = theirs[pos];
                    if (a.disc == SIZE_MAX || b.disc == SIZE_MAX)
                        throw InvalidInput("inconsistent normal arc layout");
                    // a runs from the edge towards a.from; matching direction
                    // means the image of a.from is b.from.
                    bool same_dir = g->perm[a.from] == b.from;
                    cx.glue(a.disc, a.side, b.disc, b.side, !same_dir);
                }
            }
        }
    }
    return cx;
}

}  // namespace tri3
