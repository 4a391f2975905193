#pragma once

#include <string>

#include "tri3/triangulation.hpp"

namespace tri3 {

/// Canonical isomorphism signature. Format (version 'b'): a version
/// character, then one block per connected component in sorted order. Each
/// block is the lexicographically least breadth-first description of the
/// component over all starting tetrahedra and starting vertex labellings.
/// See docs/isosig.md for the exact grammar.
std::string isosig(const Triangulation& tri);

/// Rebuilds a triangulation from its signature. Throws InvalidInput on
/// malformed strings or unknown versions.
Triangulation from_isosig(const std::string& sig);

bool is_isomorphic(const Triangulation& a, const Triangulation& b);

}  // namespace tri3
