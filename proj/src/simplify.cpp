#include "tri3/simplify.hpp"

#include <deque>
#include <random>
#include <unordered_set>

#include "tri3/isosig.hpp"
#include "tri3/skeleton.hpp"

namespace tri3 {

namespace {

bool apply_first(Triangulation& tri, const Skeleton& sk, std::size_t count, const std::vector<Move>& candidates,
                 std::vector<Move>* log) {
    (void)count;
    for (const Move& m : candidates) {
        if (test_move(tri, sk, m)) {
            tri = perform_move(tri, sk, m);
            if (log) log->push_back(m);
            return true;
        }
    }
    return false;
}

}  // namespace

bool greedy_reduce_step(Triangulation& tri, std::vector<Move>* log) {
    Skeleton sk = compute_skeleton(tri);
    std::vector<Move> c;
    for (std::size_t e = 0; e < sk.edges.size(); ++e) c.push_back({MoveType::CollapseEdge, e, 0});
    if (apply_first(tri, sk, 0, c, log)) return true;
    c.clear();
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        c.push_back({MoveType::Pachner32, e, 0});
        c.push_back({MoveType::TwoZeroEdge, e, 0});
        c.push_back({MoveType::TwoOneEdge, e, 0});
        c.push_back({MoveType::TwoOneEdge, e, 1});
    }
    if (apply_first(tri, sk, 0, c, log)) return true;
    c.clear();
    for (std::size_t v = 0; v < sk.vertices.size(); ++v) c.push_back({MoveType::TwoZeroVertex, v, 0});
    if (apply_first(tri, sk, 0, c, log)) return true;
    c.clear();
    for (std::size_t t = 0; t < tri.size(); ++t) c.push_back({MoveType::Shell, t, 0});
    return apply_first(tri, sk, 0, c, log);
}

Triangulation replay_moves(const Triangulation& tri, const std::vector<Move>& moves) {
    Triangulation t = tri;
    for (const Move& m : moves) t = perform_move(t, m);
    return t;
}

SimplifyReport simplify_fast(const Triangulation& tri, const SimplifyOptions& opts) {
    Skeleton sk0 = compute_skeleton(tri);
    if (!classify(tri, sk0).valid) throw InvalidInput("simplify requires a valid triangulation");
    SimplifyReport rep;
    rep.initial_n = tri.size();
    rep.rng_seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    Triangulation cur = tri;
    auto& log = rep.moves_applied;

    for (;;) {
        // (1) Greedy reduction.
        while (greedy_reduce_step(cur, &log)) {
        }
        // (2) Random 4-4 moves, back to (1) as soon as something reduces.
        bool reduced = false;
        {
            std::size_t most = 0, done = 0;
            for (;;) {
                auto fours = enumerate_moves(cur, {MoveType::FourFour});
                most = std::max(most, fours.size());
                if (fours.empty() || static_cast<double>(done) >= opts.four_four_factor * static_cast<double>(most))
                    break;
                const Move m = fours[std::uniform_int_distribution<std::size_t>(0, fours.size() - 1)(rng)];
                cur = perform_move(cur, m);
                log.push_back(m);
                ++done;
                if (greedy_reduce_step(cur, &log)) {
                    reduced = true;
                    break;
                }
            }
        }
        if (reduced) continue;
        // (3) Book openings on a scratch copy; keep them only if they enable a collapse.
        {
            Triangulation scratch = cur;
            std::vector<Move> trial;
            for (;;) {
                auto opens = enumerate_moves(scratch, {MoveType::BookOpen});
                if (opens.empty()) break;
                scratch = perform_move(scratch, opens.front());
                trial.push_back(opens.front());
                auto collapses = enumerate_moves(scratch, {MoveType::CollapseEdge});
                if (!collapses.empty()) {
                    scratch = perform_move(scratch, collapses.front());
                    trial.push_back(collapses.front());
                    cur = scratch;
                    log.insert(log.end(), trial.begin(), trial.end());
                    reduced = true;
                    break;
                }
            }
        }
        if (reduced) continue;
        // (4) Close one book and start over, else stop.
        auto closes = enumerate_moves(cur, {MoveType::BookClose});
        if (closes.empty()) break;
        cur = perform_move(cur, closes.front());
        log.push_back(closes.front());
    }
    rep.final_n = cur.size();
    rep.result = std::move(cur);
    rep.status = "ok";
    return rep;
}

SimplifyReport simplify_exhaustive(const Triangulation& tri, std::size_t height, unsigned threads,
                                   std::uint64_t seed, std::size_t max_nodes) {
    (void)threads;  // search is sequential; see notes in the README
    Skeleton sk0 = compute_skeleton(tri);
    Classification c0 = classify(tri, sk0);
    if (!c0.valid || !c0.closed || !c0.connected || sk0.vertices.size() != 1)
        throw PreconditionError("exhaustive simplification needs a closed connected one-vertex triangulation");

    SimplifyReport rep;
    rep.initial_n = tri.size();
    rep.rng_seed = seed;
    const std::size_t n = tri.size();
    const std::size_t top = n + height;

    struct Node {
        std::size_t parent;
        Move move;
    };
    std::vector<Node> nodes{{SIZE_MAX, Move{}}};
    auto path_to = [&](std::size_t i) {
        std::vector<Move> path;
        for (; nodes[i].parent != SIZE_MAX; i = nodes[i].parent) path.push_back(nodes[i].move);
        return std::vector<Move>(path.rbegin(), path.rend());
    };
    std::unordered_set<std::string> visited{isosig(tri)};
    std::deque<std::size_t> queue{0};

    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        std::vector<Move> path = path_to(i);
        Triangulation cur = replay_moves(tri, path);
        Skeleton sk = compute_skeleton(cur);
        std::vector<MoveType> kinds{MoveType::Pachner32};
        if (cur.size() + 1 <= top) kinds.push_back(MoveType::Pachner23);
        for (const Move& m : enumerate_moves(cur, sk, kinds)) {
            Triangulation next = perform_move(cur, sk, m);
            if (!visited.insert(isosig(next)).second) continue;
            nodes.push_back({i, m});
            if (next.size() < n) {
                SimplifyOptions opts;
                opts.seed = seed;
                SimplifyReport fast = simplify_fast(next, opts);
                rep.moves_applied = path;
                rep.moves_applied.push_back(m);
                rep.moves_applied.insert(rep.moves_applied.end(), fast.moves_applied.begin(),
                                         fast.moves_applied.end());
                rep.result = std::move(fast.result);
                rep.final_n = rep.result.size();
                rep.success = true;
                rep.status = "reduced";
                return rep;
            }
            if (nodes.size() > max_nodes) {
                rep.result = tri;
                rep.final_n = n;
                rep.success = false;
                rep.status = "node limit reached; try a larger limit";
                return rep;
            }
            queue.push_back(nodes.size() - 1);
        }
    }
    rep.result = tri;
    rep.final_n = n;
    rep.success = false;
    rep.status = "no smaller triangulation within height " + std::to_string(height) + "; try larger h";
    return rep;
}

}  // namespace tri3
