#include "tri3/moves.hpp"

#include "rebuild.hpp"
#include "tri3/union_find.hpp"

namespace tri3 {

std::string to_string(MoveType t) {
    switch (t) {
        case MoveType::Pachner23: return "2-3";
        case MoveType::Pachner32: return "3-2";
        case MoveType::FourFour: return "4-4";
        case MoveType::TwoZeroVertex: return "2-0-vertex";
        case MoveType::TwoZeroEdge: return "2-0-edge";
        case MoveType::TwoOneEdge: return "2-1";
        case MoveType::BookOpen: return "open-book";
        case MoveType::BookClose: return "close-book";
        case MoveType::Shell: return "shell";
        case MoveType::CollapseEdge: return "collapse-edge";
    }
    return "?";
}

std::string to_string(const Move& m) {
    std::string s = to_string(m.type) + "@" + std::to_string(m.location);
    if (m.type == MoveType::FourFour || m.type == MoveType::TwoOneEdge) s += "/" + std::to_string(m.variant);
    return s;
}

std::optional<int> tetrahedron_delta(MoveType t) {
    switch (t) {
        case MoveType::Pachner23: return 1;
        case MoveType::Pachner32: return -1;
        case MoveType::FourFour: return 0;
        case MoveType::TwoZeroVertex:
        case MoveType::TwoZeroEdge: return -2;
        case MoveType::TwoOneEdge: return -1;
        case MoveType::BookOpen:
        case MoveType::BookClose: return 0;
        case MoveType::Shell: return -1;
        case MoveType::CollapseEdge: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

// Permutation sending from[i] to to[i].
Perm4 perm_from(std::array<int, 4> from, std::array<int, 4> to) {
    std::array<int, 4> img{};
    for (int i = 0; i < 4; ++i) img[from[i]] = to[i];
    return Perm4(img[0], img[1], img[2], img[3]);
}

std::size_t location_count(const Triangulation& tri, const Skeleton& sk, MoveType t) {
    switch (t) {
        case MoveType::Pachner23:
        case MoveType::BookOpen: return sk.faces.size();
        case MoveType::TwoZeroVertex: return sk.vertices.size();
        case MoveType::Shell: return tri.size();
        default: return sk.edges.size();
    }
}

bool distinct_tets(const EdgeInfo& e) {
    for (std::size_t i = 0; i < e.embeddings.size(); ++i)
        for (std::size_t j = i + 1; j < e.embeddings.size(); ++j)
            if (e.embeddings[i].tet == e.embeddings[j].tet) return false;
    return true;
}

bool internal_edge_of_degree(const EdgeInfo& e, std::size_t d) {
    return !e.boundary && e.valid && e.degree() == d && distinct_tets(e);
}

// Vertex relabelling that flattens the bounding face of t0 onto that of t1
// for a degree-two vertex, or nullopt if the vertex is not of that shape.
std::optional<Perm4> two_zero_vertex_map(const Triangulation& tri, const Skeleton& sk, std::size_t v) {
    const auto& info = sk.vertices[v];
    if (info.corners.size() != 2 || info.link.type != LinkType::Sphere) return std::nullopt;
    auto [t0, v0] = info.corners[0];
    auto [t1, v1] = info.corners[1];
    if (t0 == t1) return std::nullopt;
    std::array<int, 4> img{-1, -1, -1, -1};
    img[v0] = v1;
    for (int f = 0; f < 4; ++f) {
        if (f == v0) continue;
        const auto& g = tri.gluing(t0, f);
        if (!g || g->tet != t1 || g->perm[v0] != v1) return std::nullopt;
    }
    for (int x = 0; x < 4; ++x) {
        if (x == v0) continue;
        for (int f = 0; f < 4; ++f)
            if (f != v0 && f != x) {
                int y = tri.gluing(t0, f)->perm[x];
                if (img[x] >= 0 && img[x] != y) return std::nullopt;
                img[x] = y;
            }
    }
    Perm4 p(img[0], img[1], img[2], img[3]);
    if (!p.valid()) return std::nullopt;
    return p;
}

bool test_two_zero_edge(const Skeleton& sk, std::size_t e) {
    const auto& info = sk.edges[e];
    if (!internal_edge_of_degree(info, 2)) return false;
    auto [t0, p0] = info.embeddings[0];
    auto [t1, p1] = info.embeddings[1];
    Perm4 s = p1 * Perm4::swap(2, 3) * p0.inverse();
    std::size_t f00 = sk.face_of[t0][p0[0]], f01 = sk.face_of[t0][p0[1]];
    std::size_t f10 = sk.face_of[t1][s[p0[0]]], f11 = sk.face_of[t1][s[p0[1]]];
    auto bdry = [&](std::size_t f) { return sk.faces[f].boundary(); };
    if (f00 == f10 || f01 == f11) return false;
    if (bdry(f00) && bdry(f10)) return false;
    if (bdry(f01) && bdry(f11)) return false;
    if (f00 == f01 && f10 == f11) return false;
    if (f00 == f11 && f01 == f10) return false;
    if (f00 == f01 && bdry(f10) && bdry(f11)) return false;
    if (f10 == f11 && bdry(f00) && bdry(f01)) return false;
    if (f00 == f11 && bdry(f01) && bdry(f10)) return false;
    if (f01 == f10 && bdry(f00) && bdry(f11)) return false;
    std::size_t g = sk.edge(t0, p0[2], p0[3]);
    std::size_t h = sk.edge(t1, p1[2], p1[3]);
    if (g == h) return false;
    if (sk.edges[g].boundary && sk.edges[h].boundary) return false;
    return true;
}

struct TwoOneShape {
    std::size_t tet, top;
    int a, b, c, d;
    Perm4 g;  // gluing of face a of tet onto top
};

std::optional<TwoOneShape> two_one_shape(const Triangulation& tri, const Skeleton& sk, std::size_t e, int end) {
    const auto& info = sk.edges[e];
    if (info.boundary || !info.valid || info.degree() != 1 || (end != 0 && end != 1)) return std::nullopt;
    auto [t, p] = info.embeddings[0];
    TwoOneShape s{t, 0, p[end], p[1 - end], p[2], p[3], Perm4()};
    const auto& g = tri.gluing(t, s.a);
    if (!g || g->tet == t) return std::nullopt;
    s.top = g->tet;
    s.g = g->perm;
    return s;
}

bool test_two_one(const Triangulation& tri, const Skeleton& sk, std::size_t e, int end) {
    auto s = two_one_shape(tri, sk, e, end);
    if (!s) return false;
    int a = s->g[s->a], c = s->g[s->c], d = s->g[s->d];
    std::size_t e1 = sk.edge(s->top, a, c), e2 = sk.edge(s->top, a, d);
    if (e1 == e2) return false;
    return !(sk.edges[e1].boundary && sk.edges[e2].boundary);
}

bool test_book_open(const Skeleton& sk, std::size_t f) {
    const auto& info = sk.faces[f];
    if (info.boundary()) return false;
    auto [t, face] = info.embeddings[0];
    int boundary_edges = 0, inner_a = -1, inner_b = -1, apex = -1;
    for (int x = 0; x < 4; ++x) {
        if (x == face) continue;
        int u = -1, w = -1;
        for (int y = 0; y < 4; ++y)
            if (y != face && y != x) (u < 0 ? u : w) = y;
        if (sk.edges[sk.edge(t, u, w)].boundary) {
            ++boundary_edges;
        } else {
            inner_a = u;
            inner_b = w;
            apex = x;
        }
    }
    if (boundary_edges != 2) return false;
    if (!sk.edges[sk.edge(t, inner_a, inner_b)].valid) return false;
    return sk.vertices[sk.vertex_of[t][apex]].link.type == LinkType::Disc;
}

bool test_book_close(const Skeleton& sk, std::size_t e) {
    const auto& info = sk.edges[e];
    if (!info.boundary || !info.valid || info.embeddings.empty()) return false;
    auto [t0, p0] = info.embeddings.front();
    auto [tk, pk] = info.embeddings.back();
    if (t0 == tk && p0[3] == pk[2]) return false;
    if (sk.vertex_of[t0][p0[2]] == sk.vertex_of[tk][pk[3]]) return false;
    std::size_t face = sk.face_of[t0][p0[3]];
    for (const auto& bc : sk.boundary_components)
        for (std::size_t f : bc.faces)
            if (f == face) return bc.faces.size() > 2;
    return false;
}

bool test_shell(const Triangulation& tri, const Skeleton& sk, std::size_t t) {
    std::vector<int> bdry, inner;
    for (int f = 0; f < 4; ++f) (tri.is_glued(t, f) ? inner : bdry).push_back(f);
    if (bdry.empty() || bdry.size() == 4) return false;
    if (bdry.size() == 3) return true;
    if (bdry.size() == 2) {
        if (sk.edges[sk.edge(t, bdry[0], bdry[1])].boundary) return false;
        return tri.gluing(t, inner[0])->tet != t || tri.gluing(t, inner[0])->perm[inner[0]] != inner[1];
    }
    int u = bdry[0];
    if (sk.vertices[sk.vertex_of[t][u]].boundary) return false;
    std::size_t e[3];
    for (int i = 0; i < 3; ++i) e[i] = sk.edge(t, u, inner[i]);
    return e[0] != e[1] && e[0] != e[2] && e[1] != e[2];
}

bool test_collapse(const Skeleton& sk, std::size_t e) {
    const auto& info = sk.edges[e];
    if (info.boundary || !info.valid || !distinct_tets(info)) return false;
    auto [t, p] = info.embeddings[0];
    std::size_t va = sk.vertex_of[t][p[0]], vb = sk.vertex_of[t][p[1]];
    if (va == vb) return false;
    if (sk.vertices[va].boundary && sk.vertices[vb].boundary) return false;
    CollapseGraphs g = collapse_graphs(sk, e);
    std::vector<Arc> ea, fa;
    for (auto [u, v] : g.edge_arcs) ea.push_back({u, v});
    for (auto [u, v] : g.face_arcs) fa.push_back({u, v});
    return is_forest(g.edge_nodes, ea, false) && is_forest(g.face_nodes, fa, false);
}

}  // namespace

CollapseGraphs collapse_graphs(const Skeleton& sk, std::size_t edge) {
    CollapseGraphs g;
    g.edge_nodes = sk.edges.size() + 1;
    g.face_nodes = sk.faces.size() + 1;
    for (const auto& [t, p] : sk.edges.at(edge).embeddings) {
        g.edge_arcs.emplace_back(sk.edge(t, p[0], p[2]), sk.edge(t, p[1], p[2]));
        g.face_arcs.emplace_back(sk.face_of[t][p[1]], sk.face_of[t][p[0]]);
    }
    for (std::size_t i = 0; i < sk.edges.size(); ++i)
        if (sk.edges[i].boundary) g.edge_arcs.emplace_back(i, sk.edges.size());
    for (std::size_t i = 0; i < sk.faces.size(); ++i)
        if (sk.faces[i].boundary()) g.face_arcs.emplace_back(i, sk.faces.size());
    return g;
}

bool test_move(const Triangulation& tri, const Skeleton& sk, const Move& m) {
    if (m.location >= location_count(tri, sk, m.type)) throw InvalidInput("move location out of range");
    const std::size_t x = m.location;
    switch (m.type) {
        case MoveType::Pachner23: {
            const auto& f = sk.faces[x];
            return !f.boundary() && f.embeddings[0].tet != f.embeddings[1].tet;
        }
        case MoveType::Pachner32: return internal_edge_of_degree(sk.edges[x], 3);
        case MoveType::FourFour:
            return (m.variant == 0 || m.variant == 1) && internal_edge_of_degree(sk.edges[x], 4);
        case MoveType::TwoZeroVertex: {
            if (!two_zero_vertex_map(tri, sk, x)) return false;
            const auto& c = sk.vertices[x].corners;
            std::size_t f0 = sk.face_of[c[0].tet][c[0].vertex], f1 = sk.face_of[c[1].tet][c[1].vertex];
            return f0 != f1 && !(sk.faces[f0].boundary() && sk.faces[f1].boundary());
        }
        case MoveType::TwoZeroEdge: return test_two_zero_edge(sk, x);
        case MoveType::TwoOneEdge: return test_two_one(tri, sk, x, m.variant);
        case MoveType::BookOpen: return test_book_open(sk, x);
        case MoveType::BookClose: return test_book_close(sk, x);
        case MoveType::Shell: return test_shell(tri, sk, x);
        case MoveType::CollapseEdge: return test_collapse(sk, x);
    }
    return false;
}

bool test_move(const Triangulation& tri, const Move& m) { return test_move(tri, compute_skeleton(tri), m); }

namespace {

Triangulation do_23(const Triangulation& tri, const Skeleton& sk, std::size_t face) {
    auto [t0, f0] = sk.faces[face].embeddings[0];
    auto [t1, f1] = sk.faces[face].embeddings[1];
    Perm4 g = tri.gluing(t0, f0)->perm;
    std::array<int, 3> u{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f0) u[k++] = v;
    detail::Rebuild rb(tri, {t0, t1}, 3);
    rb.interior(t0, f0);
    rb.interior(t1, f1);
    for (int i = 0; i < 3; ++i) {
        int a = u[i], b = u[(i + 1) % 3], c = u[(i + 2) % 3];
        rb.new_face(t0, a, i, 1, perm_from({f0, a, b, c}, {0, 1, 2, 3}));
        rb.new_face(t1, g[a], i, 0, perm_from({g[a], f1, g[b], g[c]}, {0, 1, 2, 3}));
        rb.join_new(i, 2, (i + 1) % 3, Perm4(0, 1, 3, 2));
    }
    return rb.finish();
}

Triangulation do_32(const Triangulation& tri, const Skeleton& sk, std::size_t edge) {
    const auto& emb = sk.edges[edge].embeddings;
    detail::Rebuild rb(tri, {emb[0].tet, emb[1].tet, emb[2].tet}, 2);
    for (int i = 0; i < 3; ++i) {
        auto [t, p] = emb[i];
        int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
        rb.new_face(t, p[1], 0, i2, perm_from({p[0], p[2], p[3], p[1]}, {3, i, i1, i2}));
        rb.new_face(t, p[0], 1, i2, perm_from({p[1], p[2], p[3], p[0]}, {3, i, i1, i2}));
        rb.interior(t, p[2]);
        rb.interior(t, p[3]);
    }
    rb.join_new(0, 3, 1, Perm4());
    return rb.finish();
}

Triangulation do_44(const Triangulation& tri, const Skeleton& sk, std::size_t edge, int axis) {
    const auto& emb = sk.edges[edge].embeddings;
    auto [t, p] = emb[axis];
    std::size_t face = sk.face_of[t][p[2]];
    // The tetrahedron opposite the new axis survives the 2-3 move and still
    // contains the original edge.
    auto [keep, kp] = emb[axis + 2];
    std::size_t removed_below = 0;
    for (std::size_t r : {emb[axis].tet, emb[axis + 1].tet})
        if (r < keep) ++removed_below;
    Triangulation mid = do_23(tri, sk, face);
    Skeleton msk = compute_skeleton(mid);
    std::size_t e = msk.edge(keep - removed_below, kp[0], kp[1]);
    if (!internal_edge_of_degree(msk.edges[e], 3)) throw std::logic_error("4-4: unexpected edge degree");
    return do_32(mid, msk, e);
}

Triangulation do_20v(const Triangulation& tri, const Skeleton& sk, std::size_t v) {
    const auto& c = sk.vertices[v].corners;
    Perm4 s = *two_zero_vertex_map(tri, sk, v);
    detail::Rebuild rb(tri, {c[0].tet, c[1].tet}, 0);
    for (int f = 0; f < 4; ++f)
        if (f != c[0].vertex) {
            rb.interior(c[0].tet, f);
            rb.interior(c[1].tet, s[f]);
        }
    rb.flatten(c[0].tet, c[0].vertex, c[1].tet, s);
    return rb.finish();
}

Triangulation do_20e(const Triangulation& tri, const Skeleton& sk, std::size_t edge) {
    auto [t0, p0] = sk.edges[edge].embeddings[0];
    auto [t1, p1] = sk.edges[edge].embeddings[1];
    Perm4 s = p1 * Perm4::swap(2, 3) * p0.inverse();
    detail::Rebuild rb(tri, {t0, t1}, 0);
    rb.interior(t0, p0[2]);
    rb.interior(t0, p0[3]);
    rb.interior(t1, p1[2]);
    rb.interior(t1, p1[3]);
    rb.flatten(t0, p0[0], t1, s);
    rb.flatten(t0, p0[1], t1, s);
    return rb.finish();
}

Triangulation do_21(const Triangulation& tri, const Skeleton& sk, std::size_t edge, int end) {
    TwoOneShape s = *two_one_shape(tri, sk, edge, end);
    const Perm4& g = s.g;
    detail::Rebuild rb(tri, {s.tet, s.top}, 1);
    rb.new_face(s.tet, s.b, 0, 1, perm_from({s.a, s.b, s.c, s.d}, {0, 1, 2, 3}));
    rb.new_face(s.top, g[s.b], 0, 0, perm_from({g[s.b], g[s.a], g[s.c], g[s.d]}, {0, 1, 2, 3}));
    rb.interior(s.tet, s.a);
    rb.interior(s.tet, s.c);
    rb.interior(s.tet, s.d);
    rb.interior(s.top, g[s.a]);
    rb.flatten(s.top, g[s.c], s.top, Perm4::swap(g[s.c], g[s.d]));
    rb.join_new(0, 2, 0, Perm4::swap(2, 3));
    return rb.finish();
}

Triangulation do_collapse(const Triangulation& tri, const Skeleton& sk, std::size_t edge) {
    const auto& emb = sk.edges[edge].embeddings;
    std::vector<std::size_t> tets;
    for (const auto& x : emb) tets.push_back(x.tet);
    detail::Rebuild rb(tri, tets, 0);
    for (const auto& [t, p] : emb) {
        rb.flatten(t, p[0], t, Perm4::swap(p[0], p[1]));
        rb.interior(t, p[2]);
        rb.interior(t, p[3]);
    }
    return rb.finish();
}

}  // namespace

Triangulation perform_move(const Triangulation& tri, const Skeleton& sk, const Move& m) {
    if (!test_move(tri, sk, m)) throw PreconditionError("move " + to_string(m) + " is not available");
    const std::size_t x = m.location;
    switch (m.type) {
        case MoveType::Pachner23: return do_23(tri, sk, x);
        case MoveType::Pachner32: return do_32(tri, sk, x);
        case MoveType::FourFour: return do_44(tri, sk, x, m.variant);
        case MoveType::TwoZeroVertex: return do_20v(tri, sk, x);
        case MoveType::TwoZeroEdge: return do_20e(tri, sk, x);
        case MoveType::TwoOneEdge: return do_21(tri, sk, x, m.variant);
        case MoveType::BookOpen: {
            Triangulation out = tri;
            auto [t, f] = sk.faces[x].embeddings[0];
            out.unjoin(t, f);
            return out;
        }
        case MoveType::BookClose: {
            Triangulation out = tri;
            auto [t0, p0] = sk.edges[x].embeddings.front();
            auto [tk, pk] = sk.edges[x].embeddings.back();
            out.join(t0, p0[3], tk, pk * Perm4::swap(2, 3) * p0.inverse());
            return out;
        }
        case MoveType::Shell: {
            Triangulation out = tri;
            out.remove_tetrahedron(x);
            return out;
        }
        case MoveType::CollapseEdge: return do_collapse(tri, sk, x);
    }
    throw std::logic_error("unknown move type");
}

Triangulation perform_move(const Triangulation& tri, const Move& m) {
    return perform_move(tri, compute_skeleton(tri), m);
}

std::vector<Move> enumerate_moves(const Triangulation& tri, const Skeleton& sk, const std::vector<MoveType>& kinds) {
    std::vector<Move> out;
    for (MoveType k : kinds) {
        const int variants = (k == MoveType::FourFour || k == MoveType::TwoOneEdge) ? 2 : 1;
        const std::size_t count = location_count(tri, sk, k);
        for (std::size_t x = 0; x < count; ++x)
            for (int v = 0; v < variants; ++v) {
                Move m{k, x, v};
                if (test_move(tri, sk, m)) out.push_back(m);
            }
    }
    return out;
}

std::vector<Move> enumerate_moves(const Triangulation& tri, const std::vector<MoveType>& kinds) {
    return enumerate_moves(tri, compute_skeleton(tri), kinds);
}

CollapseResult collapse_edge(const Triangulation& tri, std::size_t edge, bool dry_run) {
    Skeleton sk = compute_skeleton(tri);
    if (edge >= sk.edges.size()) throw InvalidInput("edge index out of range");
    if (sk.edges[edge].boundary) throw PreconditionError("boundary edge collapse is not supported");
    CollapseResult r;
    r.ok = test_collapse(sk, edge);
    if (r.ok && !dry_run) r.result = do_collapse(tri, sk, edge);
    return r;
}

}  // namespace tri3
