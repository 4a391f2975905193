#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tri3/moves.hpp"
#include "tri3/triangulation.hpp"

namespace tri3 {

struct SimplifyReport {
    std::size_t initial_n = 0;
    std::size_t final_n = 0;
    std::vector<Move> moves_applied;  // replayable from the input
    std::uint64_t rng_seed = 0;
    bool success = true;  // exhaustive search: reached a smaller level
    std::string status;
    Triangulation result;
};

struct SimplifyOptions {
    std::uint64_t seed = 0;
    /// Random 4-4 budget is this factor times the largest number of 4-4 moves
    /// seen during the current random phase.
    double four_four_factor = 5.0;
};

/// Greedy reduction: edge collapses, then 3-2 / 2-0 edge / 2-1 moves, then
/// 2-0 vertex moves, then shelling; when stuck, random 4-4 moves, then trial
/// book openings, then a book closing. Never increases the size.
SimplifyReport simplify_fast(const Triangulation& tri, const SimplifyOptions& opts = {});

/// One greedy reducing move if any exists (same priority order as
/// simplify_fast). Returns true and updates `tri` on success.
bool greedy_reduce_step(Triangulation& tri, std::vector<Move>* log = nullptr);

/// Breadth-first search through 2-3 / 3-2 moves at levels up to n + height.
/// On reaching a smaller triangulation it is passed through simplify_fast.
/// Requires a closed one-vertex triangulation (throws PreconditionError).
SimplifyReport simplify_exhaustive(const Triangulation& tri, std::size_t height, unsigned threads = 1,
                                   std::uint64_t seed = 0, std::size_t max_nodes = 2000000);

/// Applies the moves in order.
Triangulation replay_moves(const Triangulation& tri, const std::vector<Move>& moves);

}  // namespace tri3
