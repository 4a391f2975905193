#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tri3/skeleton.hpp"
#include "tri3/triangulation.hpp"

namespace tri3 {

enum class MoveType {
    Pachner23,      // location: internal face orbit between two distinct tetrahedra
    Pachner32,      // location: internal edge orbit of degree 3
    FourFour,       // location: internal edge orbit of degree 4; variant: axis 0 or 1
    TwoZeroVertex,  // location: vertex orbit of degree 2
    TwoZeroEdge,    // location: edge orbit of degree 2
    TwoOneEdge,     // location: edge orbit of degree 1; variant: which end (0 or 1)
    BookOpen,       // location: internal face orbit with exactly two boundary edges
    BookClose,      // location: boundary edge orbit
    Shell,          // location: tetrahedron index
    CollapseEdge,   // location: internal edge orbit
};

std::string to_string(MoveType t);

/// A move instance. Locations index into the skeleton of the triangulation
/// the move is applied to.
struct Move {
    MoveType type = MoveType::Pachner23;
    std::size_t location = 0;
    int variant = 0;
    friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

/// Net change in the number of tetrahedra, or nullopt for CollapseEdge
/// (which removes as many tetrahedra as the edge degree).
std::optional<int> tetrahedron_delta(MoveType t);

/// True iff the move's location exists, has the right shape and the move's
/// safety conditions hold. Throws InvalidInput if the location index is out of range.
bool test_move(const Triangulation& tri, const Move& m);
bool test_move(const Triangulation& tri, const Skeleton& sk, const Move& m);

/// Applies the move to a copy. Throws PreconditionError if test_move fails.
Triangulation perform_move(const Triangulation& tri, const Move& m);
Triangulation perform_move(const Triangulation& tri, const Skeleton& sk, const Move& m);

/// Every instance of the requested kinds that passes test_move, in order of
/// kind, then location, then variant.
std::vector<Move> enumerate_moves(const Triangulation& tri, const std::vector<MoveType>& kinds);
std::vector<Move> enumerate_moves(const Triangulation& tri, const Skeleton& sk,
                                  const std::vector<MoveType>& kinds);

/// The two conditions on the multigraphs built around an internal edge for
/// edge collapse: nodes are edge (resp. face) orbits plus a boundary node,
/// arcs join the pairs merged by the collapse and every boundary orbit to
/// the boundary node. Exposed for testing against an independent cycle finder.
struct CollapseGraphs {
    std::size_t edge_nodes = 0;  // boundary node is the last index
    std::vector<std::pair<std::size_t, std::size_t>> edge_arcs;
    std::size_t face_nodes = 0;
    std::vector<std::pair<std::size_t, std::size_t>> face_arcs;
};
CollapseGraphs collapse_graphs(const Skeleton& sk, std::size_t edge);

struct CollapseResult {
    bool ok = false;
    std::optional<Triangulation> result;
};
/// Checks the collapse conditions on an internal edge joining distinct
/// vertices and, unless dry_run, performs the collapse.
CollapseResult collapse_edge(const Triangulation& tri, std::size_t edge, bool dry_run);

}  // namespace tri3
