#pragma once

#include <vector>

#include "tri3/triangulation.hpp"

namespace tri3::detail {

/// Replaces a set of tetrahedra by new ones. Each face of a removed
/// tetrahedron (a "port") is either mapped onto a face of a new tetrahedron,
/// flattened onto another port, or interior to the replaced region. Chains of
/// flattened ports are followed until they reach an unaffected face, a new
/// face, or the boundary.
class Rebuild {
public:
    Rebuild(const Triangulation& tri, std::vector<std::size_t> removed, std::size_t new_tets);

    /// Port (t, f) becomes face `face` of new tetrahedron k; relabel maps the
    /// vertex labels of t onto those of k.
    void new_face(std::size_t t, int f, std::size_t k, int face, Perm4 relabel);
    /// Ports (t, f) and (t2, map[f]) are identified through `map` and vanish.
    void flatten(std::size_t t, int f, std::size_t t2, Perm4 map);
    void interior(std::size_t t, int f);
    /// Direct gluing between new tetrahedra.
    void join_new(std::size_t k, int face, std::size_t k2, Perm4 perm);

    /// Builds the result. New tetrahedra are appended after the survivors,
    /// which keep their relative order. Throws PreconditionError if the
    /// identifications would glue a face to itself.
    Triangulation finish() const;

    /// Index of an old tetrahedron after removal (SIZE_MAX if removed).
    std::size_t surviving_index(std::size_t t) const;

private:
    enum class Fate { Unset, NewFace, Flatten, Interior };
    struct Port {
        Fate fate = Fate::Unset;
        std::size_t tet = 0;  // new tetrahedron, or partner's old tetrahedron
        int face = 0;
        Perm4 map;
    };
    const Triangulation& tri_;
    std::vector<std::size_t> removed_;
    std::vector<char> is_removed_;
    std::size_t new_tets_;
    std::vector<std::array<Port, 4>> ports_;  // indexed by old tetrahedron
    struct NewJoin {
        std::size_t k;
        int face;
        std::size_t k2;
        Perm4 perm;
    };
    std::vector<NewJoin> new_joins_;
};

}  // namespace tri3::detail
