#pragma once

#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <vector>

#include "tri3/integer.hpp"

namespace tri3 {

using Bits = boost::dynamic_bitset<>;

/// A ray of the cone: a primitive non-negative integer vector with its support.
struct Ray {
    std::vector<Integer> v;
    Bits support;  // bit i set iff v[i] != 0
    explicit Ray(std::vector<Integer> vec);
    friend bool operator==(const Ray& a, const Ray& b) { return a.v == b.v; }
    friend bool operator<(const Ray& a, const Ray& b) { return a.v < b.v; }
};

/// Rejects combinations whose support violates a client constraint. Called
/// with the support of a candidate new ray (the union of its parents' supports).
using PairFilter = std::function<bool(const Bits& support)>;

/// The cone { x in R^d : A x = 0, x >= 0 }.
struct ConeProblem {
    std::size_t dim = 0;
    std::vector<std::vector<Integer>> rows;
    PairFilter filter;                 // optional
    std::vector<std::size_t> row_order;  // optional processing order of rows
};

struct EnumerationOptions {
    bool use_trie = true;
    /// Called with each intermediate cone (after processing k rows, k = 0..).
    std::function<void(std::size_t rows_done, const std::vector<Ray>& rays)> on_cone;
};

/// Extreme rays by the double description method, primitive and sorted.
/// Throws InvalidInput if a row has the wrong length.
std::vector<Ray> enumerate_extreme_rays(const ConeProblem& p, const EnumerationOptions& opts = {});

/// Binary radix tree over support patterns, for the combinatorial adjacency test.
class RayTrie {
public:
    explicit RayTrie(std::size_t dim);
    void insert(const Bits& support);
    /// True iff some stored pattern other than a and b (each counted once) is
    /// contained in a | b.
    bool has_other_within(const Bits& a, const Bits& b) const;
    std::size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        std::size_t child[2] = {0, 0};  // 0 = absent
        std::size_t count = 0;          // patterns in this subtree
        std::size_t here = 0;           // patterns ending at this node
    };
    std::size_t dim_;
    std::vector<Node> nodes_;
};

/// Combinatorial adjacency of rays i and j: no third ray's support lies in
/// the union of theirs. Direct scan over the set.
bool adjacent_scan(const std::vector<Ray>& rays, std::size_t i, std::size_t j);

/// Adjacency of two members of a ray set, via the trie. Throws InvalidInput
/// if either is not a member.
bool adjacent(const std::vector<Ray>& rays, const Ray& x1, const Ray& x2);

}  // namespace tri3
