#include "tri3/skeleton.hpp"

#include <optional>

#include "tri3/disc_complex.hpp"
#include "tri3/union_find.hpp"

namespace tri3 {

std::string to_string(LinkType t) {
    switch (t) {
        case LinkType::Sphere: return "sphere";
        case LinkType::Disc: return "disc";
        case LinkType::Torus: return "torus";
        case LinkType::KleinBottle: return "klein-bottle";
        case LinkType::OtherClosed: return "closed-surface";
        case LinkType::OtherBounded: return "bounded-surface";
    }
    return "?";
}

namespace {

LinkType link_type(std::int64_t chi, bool orientable, bool bounded) {
    if (!bounded) {
        if (chi == 2) return LinkType::Sphere;
        if (chi == 0) return orientable ? LinkType::Torus : LinkType::KleinBottle;
        return LinkType::OtherClosed;
    }
    if (chi == 1 && orientable) return LinkType::Disc;
    return LinkType::OtherBounded;
}

std::optional<EdgeEmbedding> step_forward(const Triangulation& tri, const EdgeEmbedding& e) {
    const auto& g = tri.gluing(e.tet, e.perm[2]);
    if (!g) return std::nullopt;
    return EdgeEmbedding{g->tet, g->perm * e.perm * Perm4::swap(2, 3)};
}

std::optional<EdgeEmbedding> step_back(const Triangulation& tri, const EdgeEmbedding& e) {
    const auto& g = tri.gluing(e.tet, e.perm[3]);
    if (!g) return std::nullopt;
    return EdgeEmbedding{g->tet, g->perm * e.perm * Perm4::swap(2, 3)};
}

int slot_of(const EdgeEmbedding& e) { return edge_number(e.perm[0], e.perm[1]); }

}  // namespace

Skeleton compute_skeleton(const Triangulation& tri) {
    const std::size_t n = tri.size();
    Skeleton sk;
    sk.vertex_of.assign(n, {});
    sk.edge_of.assign(n, {});
    sk.face_of.assign(n, {});
    sk.edge_aligned.assign(n, {});

    // Vertices.
    UnionFind corners(4 * n);
    for (std::size_t t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (const auto& g = tri.gluing(t, f))
                for (int v = 0; v < 4; ++v)
                    if (v != f) corners.unite(4 * t + v, 4 * g->tet + g->perm[v]);
    {
        std::vector<std::size_t> id(4 * n, SIZE_MAX);
        for (std::size_t t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) {
                std::size_t r = corners.find(4 * t + v);
                if (id[r] == SIZE_MAX) {
                    id[r] = sk.vertices.size();
                    sk.vertices.emplace_back();
                }
                sk.vertex_of[t][v] = id[r];
                sk.vertices[id[r]].corners.push_back(Corner{t, v});
            }
    }

    // Edges.
    std::vector<std::array<bool, 6>> seen(n, std::array<bool, 6>{});
    for (std::size_t t = 0; t < n; ++t) {
        for (int e = 0; e < 6; ++e) {
            if (seen[t][e]) continue;
            int a = kEdgeVertex[e][0], b = kEdgeVertex[e][1];
            int c = -1, d = -1;
            for (int u = 0; u < 4; ++u)
                if (u != a && u != b) (c < 0 ? c : d) = u;
            EdgeEmbedding start{t, Perm4(a, b, c, d)};
            EdgeInfo info;
            bool closed_cycle = false;
            EdgeEmbedding cur = start;
            for (std::size_t steps = 0; steps <= 6 * n; ++steps) {
                auto prev = step_back(tri, cur);
                if (!prev) {
                    info.boundary = true;
                    break;
                }
                if (prev->tet == t && slot_of(*prev) == e) {
                    closed_cycle = true;
                    if (prev->perm[0] != a) info.valid = false;
                    break;
                }
                cur = *prev;
            }
            if (closed_cycle) cur = start;
            const std::size_t id = sk.edges.size();
            EdgeEmbedding first = cur;
            for (std::size_t steps = 0; steps <= 6 * n; ++steps) {
                int s = slot_of(cur);
                if (seen[cur.tet][s]) {
                    bool back_at_start = cur.tet == first.tet && s == slot_of(first) &&
                                         cur.perm[0] == first.perm[0];
                    if (!back_at_start) info.valid = false;
                    break;
                }
                seen[cur.tet][s] = true;
                sk.edge_of[cur.tet][s] = id;
                sk.edge_aligned[cur.tet][s] = cur.perm[0] == kEdgeVertex[s][0];
                info.embeddings.push_back(cur);
                auto next = step_forward(tri, cur);
                if (!next) {
                    info.boundary = true;
                    break;
                }
                cur = *next;
            }
            sk.edges.push_back(std::move(info));
        }
    }

    // Faces.
    std::vector<std::array<bool, 4>> fseen(n, std::array<bool, 4>{});
    for (std::size_t t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (fseen[t][f]) continue;
            FaceInfo info;
            info.embeddings.push_back({t, f});
            fseen[t][f] = true;
            sk.face_of[t][f] = sk.faces.size();
            if (const auto& g = tri.gluing(t, f)) {
                int f2 = g->perm[f];
                info.embeddings.push_back({g->tet, f2});
                fseen[g->tet][f2] = true;
                sk.face_of[g->tet][f2] = sk.faces.size();
            }
            sk.faces.push_back(std::move(info));
        }

    // Vertex links: one corner triangle per tetrahedron corner. Components of
    // this complex come out in vertex-orbit order.
    {
        std::vector<DiscCounts> all(n);
        for (auto& dc : all) dc.tri = {1, 1, 1, 1};
        auto summary = assemble_disc_complex(tri, all).summarize();
        for (std::size_t v = 0; v < sk.vertices.size(); ++v) {
            const auto& c = summary.components.at(v);
            auto& info = sk.vertices[v];
            info.link = LinkClass{c.euler_char, c.orientable, c.has_boundary,
                                  link_type(c.euler_char, c.orientable, c.has_boundary)};
            info.boundary = c.has_boundary;
            info.ideal = !c.has_boundary && info.link.type != LinkType::Sphere;
        }
    }

    // Boundary components, as a complex of boundary triangles.
    {
        PolygonComplex bdry;
        std::vector<std::size_t> poly_of_face(sk.faces.size(), SIZE_MAX);
        std::vector<std::size_t> face_of_poly;
        for (std::size_t f = 0; f < sk.faces.size(); ++f)
            if (sk.faces[f].boundary()) {
                poly_of_face[f] = bdry.add_polygon(3);
                face_of_poly.push_back(f);
            }
        // Side i of the triangle for face (t, f) joins the i-th and (i+1)-th
        // of its vertices in increasing order.
        auto side_of = [](int face, int x, int y, int& side, bool& forward) {
            int verts[3], k = 0;
            for (int u = 0; u < 4; ++u)
                if (u != face) verts[k++] = u;
            for (int i = 0; i < 3; ++i) {
                int p = verts[i], q = verts[(i + 1) % 3];
                if (p == x && q == y) {
                    side = i;
                    forward = true;
                    return;
                }
                if (p == y && q == x) {
                    side = i;
                    forward = false;
                    return;
                }
            }
        };
        for (const auto& e : sk.edges) {
            if (!e.boundary || e.embeddings.empty() || !e.valid) continue;
            const auto& s = e.embeddings.front();
            const auto& l = e.embeddings.back();
            int fs = s.perm[3], fl = l.perm[2];
            int side_s = 0, side_l = 0;
            bool fwd_s = true, fwd_l = true;
            side_of(fs, s.perm[0], s.perm[1], side_s, fwd_s);
            side_of(fl, l.perm[0], l.perm[1], side_l, fwd_l);
            std::size_t ps = poly_of_face[sk.face_of[s.tet][fs]];
            std::size_t pl = poly_of_face[sk.face_of[l.tet][fl]];
            bdry.glue(ps, side_s, pl, side_l, fwd_s != fwd_l);
        }
        auto summary = bdry.summarize();
        // Recover face membership per component through a parallel union-find.
        UnionFind uf(face_of_poly.size());
        for (const auto& e : sk.edges) {
            if (!e.boundary || e.embeddings.empty() || !e.valid) continue;
            const auto& s = e.embeddings.front();
            const auto& l = e.embeddings.back();
            uf.unite(poly_of_face[sk.face_of[s.tet][s.perm[3]]], poly_of_face[sk.face_of[l.tet][l.perm[2]]]);
        }
        std::vector<std::size_t> comp(face_of_poly.size(), SIZE_MAX);
        std::size_t next = 0;
        for (std::size_t p = 0; p < face_of_poly.size(); ++p) {
            std::size_t r = uf.find(p);
            if (comp[r] == SIZE_MAX) comp[r] = next++;
            if (next > sk.boundary_components.size()) sk.boundary_components.emplace_back();
            sk.boundary_components[comp[r]].faces.push_back(face_of_poly[p]);
        }
        if (summary.components.size() == sk.boundary_components.size()) {
            for (std::size_t i = 0; i < summary.components.size(); ++i) {
                sk.boundary_components[i].euler_char = summary.components[i].euler_char;
                sk.boundary_components[i].orientable = summary.components[i].orientable;
            }
        }
    }

    // Components and orientability of the whole triangulation.
    {
        std::vector<int> orient(n, 0);
        for (std::size_t s = 0; s < n; ++s) {
            if (orient[s]) continue;
            ++sk.component_count;
            orient[s] = 1;
            std::vector<std::size_t> stack{s};
            while (!stack.empty()) {
                std::size_t t = stack.back();
                stack.pop_back();
                for (int f = 0; f < 4; ++f) {
                    const auto& g = tri.gluing(t, f);
                    if (!g) continue;
                    int want = -g->perm.sign() * orient[t];
                    if (!orient[g->tet]) {
                        orient[g->tet] = want;
                        stack.push_back(g->tet);
                    } else if (orient[g->tet] != want) {
                        sk.orientable = false;
                    }
                }
            }
        }
    }
    return sk;
}

Classification classify(const Triangulation& tri, const Skeleton& sk) {
    Classification c;
    c.orientable = sk.orientable;
    c.connected = sk.component_count <= 1;
    for (const auto& e : sk.edges)
        if (!e.valid) c.valid = false;
    bool any_boundary_face = false;
    for (const auto& f : sk.faces)
        if (f.boundary()) any_boundary_face = true;
    bool all_spheres = true, spheres_or_discs = true;
    for (const auto& v : sk.vertices) {
        switch (v.link.type) {
            case LinkType::Sphere: break;
            case LinkType::Disc: all_spheres = false; break;
            case LinkType::OtherBounded:
                c.valid = false;
                all_spheres = spheres_or_discs = false;
                break;
            default:
                c.ideal = true;
                all_spheres = spheres_or_discs = false;
                break;
        }
    }
    if (!c.valid) {
        c.ideal = false;
        return c;
    }
    c.closed = !any_boundary_face && all_spheres;
    c.bounded = any_boundary_face && spheres_or_discs;
    (void)tri;
    return c;
}

Classification classify(const Triangulation& tri) { return classify(tri, compute_skeleton(tri)); }

LinkClass vertex_link(const Triangulation& tri, std::size_t vertex) {
    Skeleton sk = compute_skeleton(tri);
    if (vertex >= sk.vertices.size()) throw InvalidInput("vertex index out of range");
    return sk.vertices[vertex].link;
}

}  // namespace tri3
