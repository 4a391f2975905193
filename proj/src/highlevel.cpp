#include "tri3/highlevel.hpp"

#include <deque>

#include "tri3/constructions.hpp"
#include "tri3/homology.hpp"
#include "tri3/normal.hpp"
#include "tri3/simplify.hpp"
#include "tri3/skeleton.hpp"

namespace tri3 {

namespace {

Triangulation simplified(const Triangulation& tri) { return simplify_fast(tri).result; }

std::size_t vertex_count(const Triangulation& tri) { return compute_skeleton(tri).vertices.size(); }

// Crushes a non-trivial normal sphere if one exists, pushing the simplified
// components back onto the worklist.
bool crush_step(const Triangulation& n, std::deque<Triangulation>& work, RecognitionStats* stats) {
    auto sphere = find_nontrivial_normal_sphere(n);
    if (!sphere) return false;
    if (stats) ++stats->crushes;
    for (const Triangulation& c : crush(n, *sphere).components()) work.push_back(simplified(c));
    return true;
}

bool has_almost_normal_sphere(const Triangulation& n, RecognitionStats* stats) {
    if (stats) ++stats->almost_normal_searches;
    return find_almost_normal_sphere(n).has_value();
}

}  // namespace

bool is_zero_efficient(const Triangulation& tri) {
    Classification c = classify(tri);
    if (!c.valid || !c.closed || !c.orientable)
        throw PreconditionError("is_zero_efficient: requires a closed orientable valid triangulation");
    return !find_nontrivial_normal_sphere(tri).has_value();
}

bool is_three_sphere(const Triangulation& tri, RecognitionStats* stats) {
    if (tri.empty()) return false;
    Classification c = classify(tri);
    if (!c.valid || !c.closed || !c.connected || !c.orientable) return false;
    Triangulation t = simplified(tri);
    if (!first_homology(t).trivial()) return false;

    std::deque<Triangulation> work{t};
    while (!work.empty()) {
        Triangulation n = std::move(work.front());
        work.pop_front();
        if (crush_step(n, work, stats)) continue;
        if (vertex_count(n) == 1) {
            if (!has_almost_normal_sphere(n, stats)) return false;
        } else if (stats) {
            ++stats->multi_vertex_drops;
        }
    }
    return true;
}

bool is_ball(const Triangulation& tri, RecognitionStats* stats) {
    if (tri.empty()) return false;
    Skeleton sk = compute_skeleton(tri);
    Classification c = classify(tri, sk);
    if (!c.valid || c.ideal || !c.connected || !c.orientable) return false;
    if (sk.boundary_components.size() != 1) return false;
    const BoundaryComponent& b = sk.boundary_components[0];
    if (b.euler_char != 2 || !b.orientable) return false;
    Triangulation t = simplified(tri);
    t = simplified(cone_boundary(t));
    return is_three_sphere(t, stats);
}

DecompositionResult connected_sum_decomposition(const Triangulation& tri, RecognitionStats* stats) {
    Classification c = classify(tri);
    if (tri.empty() || !c.valid || !c.closed || !c.connected || !c.orientable)
        throw PreconditionError("connected_sum_decomposition: requires a closed connected orientable valid triangulation");
    Triangulation t = simplified(tri);
    HomologySummary h = first_homology(t);

    DecompositionResult out;
    std::deque<Triangulation> work{t};
    while (!work.empty()) {
        Triangulation n = std::move(work.front());
        work.pop_front();
        if (crush_step(n, work, stats)) continue;
        bool keep = !first_homology(n).trivial();
        if (!keep) {
            if (vertex_count(n) == 1)
                keep = !has_almost_normal_sphere(n, stats);
            else if (stats)
                ++stats->multi_vertex_drops;
        }
        if (keep) out.summands.push_back(std::move(n));
    }

    std::size_t r = 0, t2 = 0, t3 = 0;
    for (const Triangulation& s : out.summands) {
        HomologySummary hs = first_homology(s);
        r += hs.rank;
        t2 += hs.t2;
        t3 += hs.t3;
    }
    out.appended_s2xs1 = h.rank > r ? h.rank - r : 0;
    out.appended_rp3 = h.t2 > t2 ? h.t2 - t2 : 0;
    out.appended_l31 = h.t3 > t3 ? h.t3 - t3 : 0;
    return out;
}

}  // namespace tri3
