#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tri3/triangulation.hpp"

namespace tri3 {

/// Quadrilateral type q separates {0, q+1} from the other two vertices.
/// Octagon type q meets the two edges {0, q+1} and its complement twice.
constexpr int quad_partner(int q, int v) {
    // Vertex on the same side as v.
    if (v == 0) return q + 1;
    if (v == q + 1) return 0;
    for (int u = 1; u < 4; ++u)
        if (u != v && u != q + 1) return u;
    return -1;
}

/// The quadrilateral type placing a and b on the same side.
constexpr int quad_type_joining(int a, int b) {
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    return 6 - a - b - 1;  // remaining non-zero vertex minus one
}

/// Per-tetrahedron disc counts of a (possibly almost) normal surface.
struct DiscCounts {
    std::array<std::int64_t, 4> tri{};
    std::array<std::int64_t, 3> quad{};
    std::array<std::int64_t, 3> oct{};
};

/// Generic 2-complex built from polygons glued along sides.
class PolygonComplex {
public:
    std::size_t add_polygon(int sides);

    /// Glues side i of polygon p (running corner i -> i+1) to side j of q.
    /// If `reversed` the sides are identified in opposite directions, i.e.
    /// corner i of p meets corner j+1 of q; this is the orientation-compatible case.
    void glue(std::size_t p, int i, std::size_t q, int j, bool reversed);

    struct Component {
        std::int64_t euler_char = 0;
        bool orientable = true;
        bool has_boundary = false;
        std::size_t polygons = 0;
    };
    struct Summary {
        std::int64_t euler_char = 0;
        std::vector<Component> components;
    };
    Summary summarize() const;

    std::size_t polygon_count() const { return sides_.size(); }

private:
    struct SideGluing {
        std::size_t poly;
        int side;
        bool reversed;
    };
    std::vector<int> sides_;
    std::vector<std::size_t> corner_offset_;
    std::vector<std::vector<std::optional<SideGluing>>> glued_;
};

/// Builds the surface complex of the given disc counts (one entry per
/// tetrahedron): discs are 2-cells, normal arcs on faces are glued across face
/// gluings. Throws InvalidInput if arc counts disagree across a face or if a
/// tetrahedron holds more than one quadrilateral/octagon type.
PolygonComplex assemble_disc_complex(const Triangulation& tri, const std::vector<DiscCounts>& discs);

}  // namespace tri3
