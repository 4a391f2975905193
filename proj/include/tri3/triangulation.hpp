#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tri3/perm4.hpp"

namespace tri3 {

/// Raised when a gluing table or an operation's input is malformed.
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an operation's precondition does not hold for a well-formed input.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Face f of a tetrahedron is the face opposite vertex f. The permutation maps
/// vertex labels of the source tetrahedron onto vertex labels of the target.
struct Gluing {
    std::size_t tet = 0;
    Perm4 perm;
    friend bool operator==(const Gluing&, const Gluing&) = default;
};

using GluingRow = std::array<std::optional<Gluing>, 4>;

/// Vertex pairs for the six edges of a tetrahedron, in the usual order
/// 01, 02, 03, 12, 13, 23.
inline constexpr int kEdgeVertex[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

/// Edge number joining vertices a != b.
constexpr int edge_number(int a, int b) {
    if (a > b) {
        int t = a;
        a = b;
        b = t;
    }
    return a == 0 ? b - 1 : a + b;  // 01->0 02->1 03->2 12->3 13->4 23->5
}

/// A generalised triangulation: tetrahedra with some faces affinely glued in pairs.
/// Value type; the gluing table is kept involutive by every mutator.
class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::size_t n) : rows_(n) {}

    /// Builds from a per-tetrahedron table, verifying that every gluing has its
    /// matching inverse. Throws InvalidInput otherwise.
    static Triangulation from_gluings(const std::vector<GluingRow>& table);

    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    std::size_t add_tetrahedron() {
        rows_.emplace_back();
        return rows_.size() - 1;
    }
    std::size_t add_tetrahedra(std::size_t k) {
        std::size_t first = rows_.size();
        rows_.resize(rows_.size() + k);
        return first;
    }

    /// Glues face `face` of `tet` to face perm[face] of `other`.
    void join(std::size_t tet, int face, std::size_t other, Perm4 perm);
    /// Removes the gluing on this face (and its partner).
    void unjoin(std::size_t tet, int face);

    const std::optional<Gluing>& gluing(std::size_t tet, int face) const { return rows_[tet][face]; }
    bool is_glued(std::size_t tet, int face) const { return rows_[tet][face].has_value(); }
    const std::vector<GluingRow>& rows() const { return rows_; }

    /// Deletes the given tetrahedra (faces glued to them become boundary) and
    /// reindexes survivors downwards, keeping their relative order. O(n).
    void remove_tetrahedra(std::vector<std::size_t> tets);
    void remove_tetrahedron(std::size_t tet) { remove_tetrahedra({tet}); }

    /// Appends a copy of another triangulation; returns the offset of its tetrahedra.
    std::size_t insert(const Triangulation& other);

    /// Number of glued face pairs plus boundary faces would need a skeleton; this
    /// is the raw count of unglued tetrahedron faces.
    std::size_t boundary_face_slots() const;

    /// Connected components as separate triangulations, in order of lowest tetrahedron.
    std::vector<Triangulation> components() const;
    std::size_t component_count() const;

    /// Relabels tetrahedra (tet i becomes tet_map[i]) and their vertices
    /// (vertex v of tet i becomes vertex vertex_maps[i][v]).
    Triangulation relabeled(const std::vector<std::size_t>& tet_map,
                            const std::vector<Perm4>& vertex_maps) const;

    friend bool operator==(const Triangulation&, const Triangulation&) = default;

private:
    std::vector<GluingRow> rows_;
};

}  // namespace tri3
