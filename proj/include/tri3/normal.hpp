#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tri3/cone.hpp"
#include "tri3/disc_complex.hpp"
#include "tri3/triangulation.hpp"

namespace tri3 {

/// Standard: per tetrahedron 4 triangles then 3 quads (7n).
/// Quad: 3 quads per tetrahedron (3n).
/// StandardAlmostNormal: 4 triangles, 3 quads, 3 octagons (10n).
/// QuadOct: 3 quads then 3 octagons (6n).
enum class CoordSystem { Standard, Quad, StandardAlmostNormal, QuadOct };

std::string to_string(CoordSystem s);
std::size_t coords_per_tet(CoordSystem s);
bool has_triangles(CoordSystem s);
bool has_octagons(CoordSystem s);

struct NormalSurface {
    CoordSystem system = CoordSystem::Standard;
    std::vector<Integer> coords;

    std::size_t tetrahedra() const { return coords.size() / coords_per_tet(system); }
    Integer triangle(std::size_t t, int v) const;
    Integer quad(std::size_t t, int q) const;
    Integer octagon(std::size_t t, int k) const;
    Integer octagon_total() const;
    bool vertex_linking() const;  // no quads or octagons
    /// Per tetrahedron "t0 t1 t2 t3 ; q0 q1 q2" (plus " ; o0 o1 o2" with
    /// octagons; triangles omitted in quad systems), joined by " || ".
    std::string str() const;
    NormalSurface scaled(const Integer& k) const;
    friend bool operator==(const NormalSurface&, const NormalSurface&) = default;
};

/// Matching equations plus the quadrilateral/octagon constraint filter.
/// Throws InvalidInput for invalid triangulations.
ConeProblem matching_system(const Triangulation& tri, CoordSystem sys);

/// True iff the support satisfies the embeddedness constraints: at most one
/// quad or octagon type per tetrahedron, and at most one octagon type overall.
bool satisfies_constraints(CoordSystem sys, std::size_t n, const Bits& support);

/// Exact residual check of the matching equations.
bool satisfies_matching(const Triangulation& tri, const NormalSurface& s);

std::vector<NormalSurface> enumerate_vertex_surfaces(const Triangulation& tri, CoordSystem sys);

/// Triangle completion of a quad (or quad-oct) vector: the pointwise minimal
/// non-negative triangle coordinates satisfying the standard matching
/// equations. Throws InvalidInput if no completion exists.
NormalSurface reconstruct_standard(const Triangulation& tri, const NormalSurface& s);

/// Converts a standard vector to per-tetrahedron disc counts.
std::vector<DiscCounts> disc_counts(const NormalSurface& s);

struct SurfaceComponent {
    std::int64_t euler_char = 0;
    bool orientable = true;
    bool has_boundary = false;
};

struct SurfaceAnalysis {
    std::int64_t euler_char = 0;
    std::vector<SurfaceComponent> components;
    bool vertex_linking = false;
    bool connected() const { return components.size() == 1; }
    bool is_sphere() const { return connected() && euler_char == 2 && !components[0].has_boundary; }
};

/// Builds the surface's cell complex and reports χ, components and
/// orientability. Quad systems are reconstructed first.
SurfaceAnalysis analyze(const Triangulation& tri, const NormalSurface& s);

/// χ as a linear function of the standard (or almost normal) coordinates.
Integer euler_char_linear(const Triangulation& tri, const NormalSurface& s);

/// A non-vertex-linking normal 2-sphere built from a quad vertex surface
/// (a projective plane is doubled), or nullopt if none exists (0-efficient).
std::optional<NormalSurface> find_nontrivial_normal_sphere(const Triangulation& tri);

/// A quad-oct vertex surface with exactly one octagon whose reconstruction is
/// a 2-sphere, or nullopt. Requires a closed one-vertex triangulation.
std::optional<NormalSurface> find_almost_normal_sphere(const Triangulation& tri);

/// Crushes a normal surface: tetrahedra containing quads disappear and the
/// product regions around them are flattened. Throws PreconditionError for
/// vertex-linking surfaces or surfaces with octagons.
Triangulation crush(const Triangulation& tri, const NormalSurface& s);

}  // namespace tri3
