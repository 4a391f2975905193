#include "tri3/cone.hpp"

#include <algorithm>

#include "tri3/triangulation.hpp"

namespace tri3 {

Ray::Ray(std::vector<Integer> vec) : v(std::move(vec)), support(v.size()) {
    Integer g = 0;
    for (const auto& x : v) g = gcd(g, x);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (g > 1) v[i] /= g;
        if (v[i] != 0) support.set(i);
    }
}

RayTrie::RayTrie(std::size_t dim) : dim_(dim), nodes_(1) {}

void RayTrie::insert(const Bits& support) {
    std::size_t node = 0;
    ++nodes_[0].count;
    std::size_t last = support.find_first();
    for (std::size_t i = last; i != Bits::npos; i = support.find_next(i)) last = i;
    if (support.none()) {
        ++nodes_[0].here;
        return;
    }
    for (std::size_t i = 0; i <= last; ++i) {
        int b = support[i] ? 1 : 0;
        if (!nodes_[node].child[b]) {
            nodes_[node].child[b] = nodes_.size();
            nodes_.emplace_back();
        }
        node = nodes_[node].child[b];
        ++nodes_[node].count;
    }
    ++nodes_[node].here;
}

namespace {

std::size_t last_set(const Bits& b) {
    std::size_t last = Bits::npos;
    for (std::size_t i = b.find_first(); i != Bits::npos; i = b.find_next(i)) last = i;
    return last;
}

}  // namespace

bool RayTrie::has_other_within(const Bits& a, const Bits& b) const {
    const Bits u = a | b;
    const Bits outside = ~u;
    // Past this depth every remaining coordinate is allowed to be non-zero.
    const std::size_t last_out = last_set(outside);
    const long end_a = a.none() ? 0 : static_cast<long>(last_set(a)) + 1;
    const long end_b = b.none() ? 0 : static_cast<long>(last_set(b)) + 1;

    struct Frame {
        std::size_t node;
        long depth;
        bool in_a, in_b;
    };
    std::vector<Frame> stack{{0, 0, true, true}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const Node& nd = nodes_[f.node];
        if (last_out == Bits::npos || f.depth > static_cast<long>(last_out)) {
            std::size_t mine = (f.in_a ? 1 : 0) + (f.in_b ? 1 : 0);
            if (nd.count > mine) return true;
            continue;
        }
        std::size_t mine_here = (f.in_a && f.depth == end_a ? 1 : 0) + (f.in_b && f.depth == end_b ? 1 : 0);
        if (nd.here > mine_here) return true;
        if (f.depth >= static_cast<long>(dim_)) continue;
        const std::size_t i = static_cast<std::size_t>(f.depth);
        for (int bit = 0; bit < 2; ++bit) {
            if (bit == 1 && !u[i]) continue;
            std::size_t c = nd.child[bit];
            if (!c) continue;
            bool ia = f.in_a && f.depth < end_a && (a[i] ? 1 : 0) == bit;
            bool ib = f.in_b && f.depth < end_b && (b[i] ? 1 : 0) == bit;
            stack.push_back({c, f.depth + 1, ia, ib});
        }
    }
    return false;
}

bool adjacent_scan(const std::vector<Ray>& rays, std::size_t i, std::size_t j) {
    const Bits u = rays[i].support | rays[j].support;
    for (std::size_t k = 0; k < rays.size(); ++k)
        if (k != i && k != j && rays[k].support.is_subset_of(u)) return false;
    return true;
}

bool adjacent(const std::vector<Ray>& rays, const Ray& x1, const Ray& x2) {
    if (std::find(rays.begin(), rays.end(), x1) == rays.end() || std::find(rays.begin(), rays.end(), x2) == rays.end())
        throw InvalidInput("adjacent: ray is not a member of the set");
    RayTrie trie(x1.v.size());
    for (const auto& r : rays) trie.insert(r.support);
    return !trie.has_other_within(x1.support, x2.support);
}

std::vector<Ray> enumerate_extreme_rays(const ConeProblem& p, const EnumerationOptions& opts) {
    const std::size_t d = p.dim;
    for (const auto& row : p.rows)
        if (row.size() != d) throw InvalidInput("cone: row length does not match dimension");
    std::vector<std::size_t> order = p.row_order;
    if (order.empty())
        for (std::size_t i = 0; i < p.rows.size(); ++i) order.push_back(i);
    if (order.size() != p.rows.size()) throw InvalidInput("cone: row order has the wrong length");

    std::vector<Ray> rays;
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Integer> e(d, 0);
        e[i] = 1;
        rays.emplace_back(std::move(e));
    }
    for (std::size_t step = 0; step < order.size(); ++step) {
        if (opts.on_cone) opts.on_cone(step, rays);
        const auto& row = p.rows.at(order[step]);
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            Integer s = 0;
            for (std::size_t i = rays[k].support.find_first(); i != Bits::npos; i = rays[k].support.find_next(i))
                if (row[i] != 0) s += row[i] * rays[k].v[i];
            val[k] = s;
            if (s > 0) pos.push_back(k);
            else if (s < 0) neg.push_back(k);
            else next.push_back(rays[k]);
        }
        if (!pos.empty() && !neg.empty()) {
            RayTrie trie(d);
            if (opts.use_trie)
                for (const auto& r : rays) trie.insert(r.support);
            for (std::size_t a : pos)
                for (std::size_t b : neg) {
                    if (p.filter && !p.filter(rays[a].support | rays[b].support)) continue;
                    bool adj = opts.use_trie ? !trie.has_other_within(rays[a].support, rays[b].support)
                                             : adjacent_scan(rays, a, b);
                    if (!adj) continue;
                    std::vector<Integer> v(d);
                    const Integer ca = -val[b], cb = val[a];
                    for (std::size_t i = 0; i < d; ++i) v[i] = ca * rays[a].v[i] + cb * rays[b].v[i];
                    next.emplace_back(std::move(v));
                }
        }
        rays = std::move(next);
    }
    if (opts.on_cone) opts.on_cone(order.size(), rays);
    std::sort(rays.begin(), rays.end());
    return rays;
}

}  // namespace tri3
