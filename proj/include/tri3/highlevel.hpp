#pragma once

#include <cstddef>
#include <vector>

#include "tri3/triangulation.hpp"

namespace tri3 {

/// True iff the only normal 2-spheres are vertex links. Requires a closed,
/// orientable, valid triangulation (throws PreconditionError).
bool is_zero_efficient(const Triangulation& tri);

/// Audit counters for the crushing worklist.
struct RecognitionStats {
    std::size_t crushes = 0;
    std::size_t almost_normal_searches = 0;
    /// Multi-vertex leftovers with no quad normal sphere, which are dropped.
    std::size_t multi_vertex_drops = 0;
};

/// Exact 3-sphere recognition: crush quad vertex normal spheres until every
/// piece is 0-efficient, then look for almost normal spheres in one-vertex pieces.
bool is_three_sphere(const Triangulation& tri, RecognitionStats* stats = nullptr);

/// Exact 3-ball recognition: cone the boundary sphere and recognise S³.
bool is_ball(const Triangulation& tri, RecognitionStats* stats = nullptr);

struct DecompositionResult {
    std::vector<Triangulation> summands;
    /// Copies of S²×S¹, RP³ and L(3,1) restored by homology bookkeeping
    /// (crushing can silently delete these).
    std::size_t appended_s2xs1 = 0;
    std::size_t appended_rp3 = 0;
    std::size_t appended_l31 = 0;
    std::size_t total() const { return summands.size() + appended_s2xs1 + appended_rp3 + appended_l31; }
};

/// Prime decomposition (no S³ terms). Requires a closed, connected,
/// orientable, valid triangulation (throws PreconditionError).
DecompositionResult connected_sum_decomposition(const Triangulation& tri, RecognitionStats* stats = nullptr);

}  // namespace tri3
