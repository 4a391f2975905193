#include "tri3/census.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "tri3/isosig.hpp"
#include "tri3/skeleton.hpp"

namespace tri3 {

using Graph = std::vector<std::vector<int>>;

bool census_accepts(const Triangulation& tri, const CensusSpec& spec) {
    if (tri.size() != spec.n) return false;
    Skeleton sk = compute_skeleton(tri);
    Classification c = classify(tri, sk);
    if (!c.valid || !c.connected) return false;
    if (spec.orientable && !c.orientable) return false;
    if (spec.finite && c.ideal) return false;
    if (spec.internal) {
        for (const auto& f : sk.faces)
            if (f.boundary()) return false;
    }
    return true;
}

namespace {

bool graph_connected(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < n; ++j)
            if (g[i][j] && !seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<int> canonical_code(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::vector<int> best;
    do {
        std::vector<int> code;
        code.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) code.push_back(g[p[i]][p[j]]);
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

}  // namespace

std::vector<Graph> face_pairing_graphs(std::size_t n, bool closed) {
    std::vector<Graph> out;
    if (n == 0) return out;
    Graph g(n, std::vector<int>(n, 0));
    std::vector<int> used(n, 0);
    std::set<std::vector<int>> seen;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            if (closed && std::any_of(used.begin(), used.end(), [](int u) { return u != 4; })) return;
            if (!graph_connected(g)) return;
            if (seen.insert(canonical_code(g)).second) out.push_back(g);
            return;
        }
        auto [i, j] = cells[k];
        // Once the last cell of row i is passed, a closed graph needs row i full.
        for (int c = 0;; ++c) {
            int need_i = i == j ? 2 * c : c;
            if (used[i] + need_i > 4 || (i != j && used[j] + c > 4)) break;
            used[i] += need_i;
            if (i != j) used[j] += c;
            g[i][j] = g[j][i] = c;
            bool row_done = j + 1 == n;
            if (!(closed && row_done && used[i] != 4)) rec(k + 1);
            used[i] -= need_i;
            if (i != j) used[j] -= c;
            g[i][j] = g[j][i] = 0;
        }
    };
    rec(0);
    return out;
}

namespace {

struct FacePair {
    std::size_t t;
    int f;
    std::size_t u;
    int g;
};

std::vector<FacePair> face_pairs(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<int> next(n, 0);
    std::vector<FacePair> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (int c = 0; c < g[i][j]; ++c) {
                int f = next[i]++;
                int h = next[j]++;
                out.push_back({i, f, j, h});
            }
    return out;
}

// All gluing permutations for each face pair, given tetrahedron orientations
// (empty = no orientation constraint).
void search(const std::vector<FacePair>& pairs, const std::vector<int>& orient, const CensusSpec& spec,
            std::size_t k, Triangulation& tri, std::set<std::string>& found) {
    if (k == pairs.size()) {
        if (census_accepts(tri, spec)) found.insert(isosig(tri));
        return;
    }
    const FacePair& p = pairs[k];
    for (const Perm4& perm : Perm4::all()) {
        if (perm[p.f] != p.g) continue;
        if (!orient.empty() && perm.sign() != -orient[p.t] * orient[p.u]) continue;
        tri.join(p.t, p.f, p.u, perm);
        search(pairs, orient, spec, k + 1, tri, found);
        tri.unjoin(p.t, p.f);
    }
}

}  // namespace

std::vector<std::string> enumerate_census(const CensusSpec& spec, unsigned threads) {
    if (spec.n == 0) return {};
    struct Job {
        std::vector<FacePair> pairs;
        std::vector<int> orient;
    };
    std::vector<Job> jobs;
    for (const auto& g : face_pairing_graphs(spec.n, spec.internal)) {
        auto pairs = face_pairs(g);
        if (!spec.orientable) {
            jobs.push_back({pairs, {}});
            continue;
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << (spec.n - 1)); ++mask) {
            std::vector<int> orient(spec.n, 1);
            for (std::size_t t = 1; t < spec.n; ++t) orient[t] = (mask >> (t - 1)) & 1 ? -1 : 1;
            jobs.push_back({pairs, orient});
        }
    }
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::set<std::string> all;
    std::mutex lock;
    std::size_t next = 0;
    auto worker = [&]() {
        std::set<std::string> local;
        for (;;) {
            std::size_t j;
            {
                std::lock_guard<std::mutex> guard(lock);
                if (next == jobs.size()) break;
                j = next++;
            }
            Triangulation tri(spec.n);
            search(jobs[j].pairs, jobs[j].orient, spec, 0, tri, local);
        }
        std::lock_guard<std::mutex> guard(lock);
        all.insert(local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return {all.begin(), all.end()};
}

}  // namespace tri3
