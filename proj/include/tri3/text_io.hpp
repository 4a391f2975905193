#pragma once

#include <iosfwd>
#include <string>

#include "tri3/triangulation.hpp"

namespace tri3 {

/// Plain-text gluing table. Header `tets N`, then one line per tetrahedron
/// with four fields for faces 012, 013, 023, 123. Each field is `-` for a
/// boundary face or `t(xyz)`: glued to tetrahedron t, with the face's vertices
/// (in the order listed) mapping to x, y, z. Lines starting with `#` are ignored.
Triangulation read_gluing_table(std::istream& in);
Triangulation parse_gluing_table(const std::string& text);
std::string format_gluing_table(const Triangulation& tri);

}  // namespace tri3
