#pragma once

#include "tri3/triangulation.hpp"

namespace tri3 {

/// Attaches one tetrahedron per boundary face, coning each boundary component
/// to a single new vertex. Throws PreconditionError if there are no boundary faces
/// (an empty input yields an empty output).
Triangulation cone_boundary(const Triangulation& tri);

/// Barycentric subdivision: 24 tetrahedra per tetrahedron.
Triangulation barycentric_subdivide(const Triangulation& tri);

}  // namespace tri3
