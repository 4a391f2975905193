#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace tri3 {

/// Disjoint-set forest with union by rank. Path compression is optional;
/// without it every operation is O(log n).
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0, bool compress = true) : compress_(compress) { reset(n); }

    void reset(std::size_t n) {
        parent_.resize(n);
        rank_.assign(n, 0);
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
        sets_ = n;
    }

    std::size_t add() {
        parent_.push_back(parent_.size());
        rank_.push_back(0);
        ++sets_;
        return parent_.size() - 1;
    }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent_[root] != root) root = parent_[root];
        if (compress_) {
            while (parent_[x] != root) {
                std::size_t next = parent_[x];
                parent_[x] = root;
                x = next;
            }
        }
        return root;
    }

    /// Merges the sets of x and y. Returns false if they were already joined.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (rank_[x] < rank_[y]) std::swap(x, y);
        parent_[y] = x;
        if (rank_[x] == rank_[y]) ++rank_[x];
        --sets_;
        return true;
    }

    bool same(std::size_t x, std::size_t y) { return find(x) == find(y); }
    std::size_t size() const { return parent_.size(); }
    std::size_t set_count() const { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
    std::size_t sets_ = 0;
    bool compress_;
};

/// Undirected multigraph arc between two nodes (loops allowed).
struct Arc {
    std::size_t u;
    std::size_t v;
};

/// True iff the multigraph on `nodes` nodes with the given arcs is a forest.
/// Arcs are merged one at a time; an arc closing a component is a cycle.
inline bool is_forest(std::size_t nodes, const std::vector<Arc>& arcs, bool compress = true) {
    UnionFind uf(nodes, compress);
    for (const Arc& a : arcs)
        if (!uf.unite(a.u, a.v)) return false;
    return true;
}

}  // namespace tri3
