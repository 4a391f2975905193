#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "tri3/cone.hpp"
#include "tri3/triangulation.hpp"

namespace tri3 {

using Rational = boost::multiprecision::cpp_rational;

/// Dihedral angles in units of π, one per pair of opposite edges. Entry
/// 3t + k belongs to tetrahedron t and edge pair k: 01/23, 02/13, 03/12.
struct AngleStructure {
    std::vector<Rational> angles;

    std::size_t tetrahedra() const { return angles.size() / 3; }
    const Rational& angle(std::size_t t, int k) const { return angles[3 * t + k]; }
    /// Every angle is 0 or π.
    bool taut() const;
    /// Per tetrahedron "a ; b ; c", joined by " || ".
    std::string str() const;
    friend bool operator==(const AngleStructure&, const AngleStructure&) = default;
    friend bool operator<(const AngleStructure& a, const AngleStructure& b) { return a.angles < b.angles; }
};

/// Angle pair index of the tetrahedron edge joining vertices a and b.
constexpr int angle_pair(int a, int b) {
    int e = edge_number(a, b);
    return e < 3 ? e : 5 - e;
}

/// The projectivised system in 3n + 1 variables (angles, then the π
/// coordinate): per tetrahedron a0 + a1 + a2 = π, per edge the incident angles
/// sum to 2π. Throws PreconditionError unless every vertex is ideal with a
/// torus or Klein bottle link. With `taut`, the pair filter allows at most one
/// non-zero angle per tetrahedron.
ConeProblem angle_system(const Triangulation& tri, bool taut = false);

/// Exact residual check of the angle equations.
bool satisfies_angle_equations(const Triangulation& tri, const AngleStructure& s);

/// Vertices of the angle structure polytope, sorted.
std::vector<AngleStructure> enumerate_vertex_angle_structures(const Triangulation& tri);

/// Taut angle structures, enumerated with the taut pair filter, sorted.
std::vector<AngleStructure> enumerate_taut(const Triangulation& tri);

}  // namespace tri3
