#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tri3/triangulation.hpp"

namespace tri3 {

enum class LinkType { Sphere, Disc, Torus, KleinBottle, OtherClosed, OtherBounded };

std::string to_string(LinkType t);

struct LinkClass {
    std::int64_t euler_char = 0;
    bool orientable = true;
    bool has_boundary = false;
    LinkType type = LinkType::Sphere;
};

/// A tetrahedron corner (t, v).
struct Corner {
    std::size_t tet;
    int vertex;
};

/// One appearance of an edge inside a tetrahedron. perm[0], perm[1] are the
/// edge endpoints; the next embedding around the edge is reached through face
/// perm[2], and the previous one through face perm[3].
struct EdgeEmbedding {
    std::size_t tet;
    Perm4 perm;
};

struct FaceEmbedding {
    std::size_t tet;
    int face;
};

struct VertexInfo {
    std::vector<Corner> corners;
    LinkClass link;
    bool boundary = false;  // link has boundary
    bool ideal = false;     // closed non-sphere link
};

struct EdgeInfo {
    /// Embeddings in walk order. For boundary edges the walk starts and ends at boundary faces.
    std::vector<EdgeEmbedding> embeddings;
    bool boundary = false;
    bool valid = true;  // false if identified with itself in reverse
    std::size_t degree() const { return embeddings.size(); }
};

struct FaceInfo {
    std::vector<FaceEmbedding> embeddings;  // one (boundary) or two
    bool boundary() const { return embeddings.size() == 1; }
};

struct BoundaryComponent {
    std::vector<std::size_t> faces;  // face orbit indices
    std::int64_t euler_char = 0;
    bool orientable = true;
};

/// Identified vertices, edges and faces of a triangulation with
/// back-references from each tetrahedron. Built in linear time.
struct Skeleton {
    std::vector<VertexInfo> vertices;
    std::vector<EdgeInfo> edges;
    std::vector<FaceInfo> faces;
    std::vector<BoundaryComponent> boundary_components;

    std::vector<std::array<std::size_t, 4>> vertex_of;  // [tet][vertex]
    std::vector<std::array<std::size_t, 6>> edge_of;    // [tet][edge]
    std::vector<std::array<std::size_t, 4>> face_of;    // [tet][face]
    /// Whether tet-edge (t, e) runs in the same direction as the first embedding of its orbit.
    std::vector<std::array<bool, 6>> edge_aligned;

    std::size_t component_count = 0;
    bool orientable = true;

    /// Edge orbit of the tetrahedron edge joining vertices a and b of tet t.
    std::size_t edge(std::size_t t, int a, int b) const { return edge_of[t][edge_number(a, b)]; }
};

Skeleton compute_skeleton(const Triangulation& tri);

/// Topological classification flags.
struct Classification {
    bool valid = true;
    bool closed = false;
    bool bounded = false;
    bool ideal = false;
    bool orientable = true;
    bool connected = true;
};

Classification classify(const Triangulation& tri);
Classification classify(const Triangulation& tri, const Skeleton& sk);

/// Link of the given vertex orbit, assembled from corner triangles.
LinkClass vertex_link(const Triangulation& tri, std::size_t vertex);

}  // namespace tri3
