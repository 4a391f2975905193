#include "tri3/normal.hpp"

#include <sstream>

#include "rebuild.hpp"
#include "tri3/skeleton.hpp"

namespace tri3 {

std::string to_string(CoordSystem s) {
    switch (s) {
        case CoordSystem::Standard: return "standard";
        case CoordSystem::Quad: return "quad";
        case CoordSystem::StandardAlmostNormal: return "standardan";
        case CoordSystem::QuadOct: return "quadoct";
    }
    return "?";
}

std::size_t coords_per_tet(CoordSystem s) {
    switch (s) {
        case CoordSystem::Standard: return 7;
        case CoordSystem::Quad: return 3;
        case CoordSystem::StandardAlmostNormal: return 10;
        case CoordSystem::QuadOct: return 6;
    }
    return 0;
}

bool has_triangles(CoordSystem s) { return s == CoordSystem::Standard || s == CoordSystem::StandardAlmostNormal; }
bool has_octagons(CoordSystem s) { return s == CoordSystem::StandardAlmostNormal || s == CoordSystem::QuadOct; }

namespace {

std::size_t tri_idx(CoordSystem s, std::size_t t, int v) { return coords_per_tet(s) * t + static_cast<std::size_t>(v); }
std::size_t quad_idx(CoordSystem s, std::size_t t, int q) {
    return coords_per_tet(s) * t + (has_triangles(s) ? 4 : 0) + static_cast<std::size_t>(q);
}
std::size_t oct_idx(CoordSystem s, std::size_t t, int k) {
    return coords_per_tet(s) * t + (has_triangles(s) ? 7 : 3) + static_cast<std::size_t>(k);
}

// Adds `sign` times the arc count around vertex v in face f of tetrahedron t,
// excluding triangles, to a row.
template <typename Row>
void add_non_triangle_arcs(Row& row, CoordSystem s, std::size_t t, int f, int v, int sign) {
    int q = quad_type_joining(v, f);
    row[quad_idx(s, t, q)] += sign;
    if (has_octagons(s))
        for (int k = 0; k < 3; ++k)
            if (k != q) row[oct_idx(s, t, k)] += sign;
}

void require_valid(const Classification& c) {
    if (!c.valid) throw InvalidInput("normal surfaces need a valid triangulation");
}

}  // namespace

Integer NormalSurface::triangle(std::size_t t, int v) const {
    return has_triangles(system) ? coords[tri_idx(system, t, v)] : Integer(0);
}
Integer NormalSurface::quad(std::size_t t, int q) const { return coords[quad_idx(system, t, q)]; }
Integer NormalSurface::octagon(std::size_t t, int k) const {
    return has_octagons(system) ? coords[oct_idx(system, t, k)] : Integer(0);
}

Integer NormalSurface::octagon_total() const {
    Integer s = 0;
    for (std::size_t t = 0; t < tetrahedra(); ++t)
        for (int k = 0; k < 3; ++k) s += octagon(t, k);
    return s;
}

bool NormalSurface::vertex_linking() const {
    for (std::size_t t = 0; t < tetrahedra(); ++t)
        for (int q = 0; q < 3; ++q)
            if (quad(t, q) != 0 || octagon(t, q) != 0) return false;
    return true;
}

std::string NormalSurface::str() const {
    std::ostringstream out;
    for (std::size_t t = 0; t < tetrahedra(); ++t) {
        if (t) out << " || ";
        if (has_triangles(system)) {
            for (int v = 0; v < 4; ++v) out << (v ? " " : "") << triangle(t, v);
            out << " ; ";
        }
        for (int q = 0; q < 3; ++q) out << (q ? " " : "") << quad(t, q);
        if (has_octagons(system)) {
            out << " ;";
            for (int k = 0; k < 3; ++k) out << " " << octagon(t, k);
        }
    }
    return out.str();
}

NormalSurface NormalSurface::scaled(const Integer& k) const {
    NormalSurface s = *this;
    for (auto& x : s.coords) x *= k;
    return s;
}

bool satisfies_constraints(CoordSystem sys, std::size_t n, const Bits& support) {
    int octs = 0;
    for (std::size_t t = 0; t < n; ++t) {
        int here = 0;
        for (int q = 0; q < 3; ++q) {
            if (support[quad_idx(sys, t, q)]) ++here;
            if (has_octagons(sys) && support[oct_idx(sys, t, q)]) {
                ++here;
                ++octs;
            }
        }
        if (here > 1) return false;
    }
    return octs <= 1;
}

ConeProblem matching_system(const Triangulation& tri, CoordSystem sys) {
    Skeleton sk = compute_skeleton(tri);
    require_valid(classify(tri, sk));
    const std::size_t n = tri.size();
    ConeProblem p;
    p.dim = coords_per_tet(sys) * n;
    if (has_triangles(sys)) {
        for (const auto& face : sk.faces) {
            if (face.boundary()) continue;
            auto [t, f] = face.embeddings[0];
            const auto& g = *tri.gluing(t, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                std::vector<Integer> row(p.dim, 0);
                row[tri_idx(sys, t, v)] += 1;
                add_non_triangle_arcs(row, sys, t, f, v, 1);
                row[tri_idx(sys, g.tet, g.perm[v])] -= 1;
                add_non_triangle_arcs(row, sys, g.tet, g.perm[f], g.perm[v], -1);
                p.rows.push_back(std::move(row));
            }
        }
    } else {
        for (const auto& edge : sk.edges) {
            if (edge.boundary) continue;
            std::vector<Integer> row(p.dim, 0);
            for (const auto& [t, pi] : edge.embeddings) {
                int up = quad_type_joining(pi[0], pi[2]), down = quad_type_joining(pi[0], pi[3]);
                row[quad_idx(sys, t, up)] += 1;
                row[quad_idx(sys, t, down)] -= 1;
                if (has_octagons(sys)) {
                    row[oct_idx(sys, t, down)] += 1;
                    row[oct_idx(sys, t, up)] -= 1;
                }
            }
            p.rows.push_back(std::move(row));
        }
    }
    p.filter = [sys, n](const Bits& support) { return satisfies_constraints(sys, n, support); };
    return p;
}

bool satisfies_matching(const Triangulation& tri, const NormalSurface& s) {
    ConeProblem p = matching_system(tri, s.system);
    if (s.coords.size() != p.dim) return false;
    for (const auto& row : p.rows) {
        Integer r = 0;
        for (std::size_t i = 0; i < p.dim; ++i) r += row[i] * s.coords[i];
        if (r != 0) return false;
    }
    return true;
}

std::vector<NormalSurface> enumerate_vertex_surfaces(const Triangulation& tri, CoordSystem sys) {
    ConeProblem p = matching_system(tri, sys);
    std::vector<NormalSurface> out;
    for (auto& r : enumerate_extreme_rays(p))
        if (satisfies_constraints(sys, tri.size(), r.support)) out.push_back({sys, std::move(r.v)});
    return out;
}

namespace {

Integer non_triangle_arcs(const NormalSurface& s, std::size_t t, int f, int v) {
    int q = quad_type_joining(v, f);
    Integer r = s.quad(t, q);
    for (int k = 0; k < 3; ++k)
        if (k != q) r += s.octagon(t, k);
    return r;
}

Integer arcs(const NormalSurface& s, std::size_t t, int f, int v) {
    return s.triangle(t, v) + non_triangle_arcs(s, t, f, v);
}

}  // namespace

NormalSurface reconstruct_standard(const Triangulation& tri, const NormalSurface& s) {
    if (has_triangles(s.system)) return s;
    const std::size_t n = tri.size();
    if (s.coords.size() != coords_per_tet(s.system) * n) throw InvalidInput("surface has the wrong dimension");
    NormalSurface out;
    out.system = has_octagons(s.system) ? CoordSystem::StandardAlmostNormal : CoordSystem::Standard;
    out.coords.assign(coords_per_tet(out.system) * n, 0);
    for (std::size_t t = 0; t < n; ++t)
        for (int q = 0; q < 3; ++q) {
            out.coords[quad_idx(out.system, t, q)] = s.quad(t, q);
            if (has_octagons(s.system)) out.coords[oct_idx(out.system, t, q)] = s.octagon(t, q);
        }
    std::vector<std::array<bool, 4>> seen(n, std::array<bool, 4>{});
    std::vector<std::array<Integer, 4>> val(n);
    for (std::size_t t0 = 0; t0 < n; ++t0)
        for (int v0 = 0; v0 < 4; ++v0) {
            if (seen[t0][v0]) continue;
            std::vector<std::pair<std::size_t, int>> orbit{{t0, v0}};
            seen[t0][v0] = true;
            val[t0][v0] = 0;
            for (std::size_t i = 0; i < orbit.size(); ++i) {
                auto [t, v] = orbit[i];
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const auto& g = tri.gluing(t, f);
                    if (!g) continue;
                    std::size_t u = g->tet;
                    int w = g->perm[v];
                    Integer x = val[t][v] + non_triangle_arcs(out, t, f, v) - non_triangle_arcs(out, u, g->perm[f], w);
                    if (!seen[u][w]) {
                        seen[u][w] = true;
                        val[u][w] = x;
                        orbit.emplace_back(u, w);
                    } else if (val[u][w] != x) {
                        throw InvalidInput("surface has no consistent triangle completion");
                    }
                }
            }
            Integer lo = val[t0][v0];
            for (auto [t, v] : orbit) lo = std::min(lo, val[t][v]);
            for (auto [t, v] : orbit) out.coords[tri_idx(out.system, t, v)] = val[t][v] - lo;
        }
    return out;
}

std::vector<DiscCounts> disc_counts(const NormalSurface& s) {
    if (!has_triangles(s.system)) throw InvalidInput("disc counts need standard coordinates");
    std::vector<DiscCounts> out(s.tetrahedra());
    for (std::size_t t = 0; t < out.size(); ++t) {
        for (int v = 0; v < 4; ++v) out[t].tri[v] = s.triangle(t, v).convert_to<std::int64_t>();
        for (int q = 0; q < 3; ++q) {
            out[t].quad[q] = s.quad(t, q).convert_to<std::int64_t>();
            out[t].oct[q] = s.octagon(t, q).convert_to<std::int64_t>();
        }
    }
    return out;
}

SurfaceAnalysis analyze(const Triangulation& tri, const NormalSurface& input) {
    NormalSurface s = reconstruct_standard(tri, input);
    for (const auto& x : s.coords)
        if (x < 0) throw InvalidInput("surface has negative coordinates");
    auto summary = assemble_disc_complex(tri, disc_counts(s)).summarize();
    SurfaceAnalysis a;
    a.euler_char = summary.euler_char;
    for (const auto& c : summary.components) a.components.push_back({c.euler_char, c.orientable, c.has_boundary});
    a.vertex_linking = s.vertex_linking();
    return a;
}

Integer euler_char_linear(const Triangulation& tri, const NormalSurface& input) {
    NormalSurface s = reconstruct_standard(tri, input);
    Skeleton sk = compute_skeleton(tri);
    Integer vertices = 0, edges = 0, faces = 0;
    for (const auto& e : sk.edges) {
        auto [t, p] = e.embeddings[0];
        int a = p[0], b = p[1], same = quad_type_joining(a, b);
        vertices += s.triangle(t, a) + s.triangle(t, b);
        for (int q = 0; q < 3; ++q) {
            if (q != same) vertices += s.quad(t, q);
            vertices += (q == same ? 2 : 1) * s.octagon(t, q);
        }
    }
    for (const auto& f : sk.faces) {
        auto [t, face] = f.embeddings[0];
        for (int v = 0; v < 4; ++v)
            if (v != face) edges += arcs(s, t, face, v);
    }
    for (const auto& x : s.coords) faces += x;
    return vertices - edges + faces;
}

std::optional<NormalSurface> find_nontrivial_normal_sphere(const Triangulation& tri) {
    Classification c = classify(tri);
    if (!c.valid || !c.closed) throw PreconditionError("sphere search needs a closed valid triangulation");
    for (const auto& q : enumerate_vertex_surfaces(tri, CoordSystem::Quad)) {
        NormalSurface s = reconstruct_standard(tri, q);
        SurfaceAnalysis a = analyze(tri, s);
        if (!a.connected() || a.euler_char <= 0) continue;
        if (a.euler_char == 2) return s;
        if (a.euler_char == 1) return reconstruct_standard(tri, q.scaled(2));
    }
    return std::nullopt;
}

std::optional<NormalSurface> find_almost_normal_sphere(const Triangulation& tri) {
    Skeleton sk = compute_skeleton(tri);
    Classification c = classify(tri, sk);
    if (!c.valid || !c.closed || sk.vertices.size() != 1)
        throw PreconditionError("almost normal sphere search needs a closed one-vertex triangulation");
    for (const auto& q : enumerate_vertex_surfaces(tri, CoordSystem::QuadOct)) {
        if (q.octagon_total() != 1) continue;
        NormalSurface s = reconstruct_standard(tri, q);
        if (analyze(tri, s).is_sphere()) return s;
    }
    return std::nullopt;
}

Triangulation crush(const Triangulation& tri, const NormalSurface& input) {
    NormalSurface s = reconstruct_standard(tri, input);
    if (s.octagon_total() != 0) throw PreconditionError("cannot crush an almost normal surface");
    if (s.vertex_linking()) throw PreconditionError("nothing to crush: surface has no quadrilaterals");
    std::vector<std::size_t> removed;
    std::vector<int> type(tri.size(), -1);
    for (std::size_t t = 0; t < tri.size(); ++t)
        for (int q = 0; q < 3; ++q)
            if (s.quad(t, q) != 0) {
                type[t] = q;
                removed.push_back(t);
                break;
            }
    detail::Rebuild rb(tri, removed, 0);
    for (std::size_t t : removed) {
        int q = type[t];
        rb.flatten(t, 0, t, Perm4::swap(0, q + 1));
        int c = -1, d = -1;
        for (int v = 1; v < 4; ++v)
            if (v != q + 1) (c < 0 ? c : d) = v;
        rb.flatten(t, c, t, Perm4::swap(c, d));
    }
    return rb.finish();
}

}  // namespace tri3
