#include "tri3/homology.hpp"

#include <algorithm>
#include <sstream>

#include "tri3/skeleton.hpp"

namespace tri3 {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

// Diagonalises by unimodular row and column operations; returns the nonzero
// diagonal entries (not yet in divisibility order).
std::vector<Integer> diagonalise(Matrix& a) {
    std::vector<Integer> diag;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    std::size_t k = 0;
    while (k < m && k < n) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        std::size_t pr = m, pc = n;
        Integer best = 0;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (a[i][j] != 0 && (best == 0 || abs(a[i][j]) < best)) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == m) break;
        std::swap(a[k], a[pr]);
        for (auto& row : a) std::swap(row[k], row[pc]);

        bool clean = true;
        for (std::size_t i = k + 1; i < m; ++i) {
            if (a[i][k] == 0) continue;
            Integer q = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
            if (a[i][k] != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a[k][j] == 0) continue;
            Integer q = a[k][j] / a[k][k];
            for (std::size_t i = k; i < m; ++i) a[i][j] -= q * a[i][k];
            if (a[k][j] != 0) clean = false;
        }
        if (!clean) continue;  // a smaller remainder now exists; re-pivot
        diag.push_back(abs(a[k][k]));
        ++k;
    }
    return diag;
}

}  // namespace

SmithForm smith_form(Matrix matrix) {
    std::vector<Integer> d = diagonalise(matrix);
    SmithForm out;
    out.rank = d.size();
    // Normalise to a divisibility chain via (gcd, lcm) exchanges.
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            Integer l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
    for (const auto& x : d)
        if (x > 1) out.invariant_factors.push_back(x);
    return out;
}

HomologySummary make_homology(std::size_t rank, std::vector<Integer> torsion) {
    HomologySummary h;
    h.rank = rank;
    std::sort(torsion.begin(), torsion.end());
    for (const auto& t : torsion) {
        if (t <= 1) continue;
        h.torsion.push_back(t);
        if (t % 2 == 0) ++h.t2;
        if (t % 3 == 0) ++h.t3;
    }
    return h;
}

std::string HomologySummary::str() const {
    if (trivial()) return "0";
    std::vector<std::string> parts;
    if (rank == 1) parts.push_back("Z");
    if (rank > 1) parts.push_back(std::to_string(rank) + " Z");
    for (std::size_t i = 0; i < torsion.size();) {
        std::size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
        std::string term = "Z_" + torsion[i].str();
        parts.push_back(j - i == 1 ? term : std::to_string(j - i) + " " + term);
        i = j;
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " + " : "") + parts[i];
    return s;
}

HomologyPresentation homology_presentation(const Triangulation& tri) {
    Skeleton sk = compute_skeleton(tri);
    Classification c = classify(tri, sk);
    if (!c.valid) throw InvalidInput("homology requires a valid triangulation");

    HomologyPresentation p;
    std::vector<std::size_t> gen(sk.faces.size(), SIZE_MAX);
    for (std::size_t f = 0; f < sk.faces.size(); ++f)
        if (!sk.faces[f].boundary()) gen[f] = p.generators++;
    p.boundary_rank = tri.size() - sk.component_count;

    for (const auto& e : sk.edges) {
        if (e.boundary) continue;
        std::vector<Integer> row(p.generators, 0);
        for (const auto& emb : e.embeddings) {
            int face = emb.perm[2];
            std::size_t f = sk.face_of[emb.tet][face];
            const auto& first = sk.faces[f].embeddings[0];
            bool forward = first.tet == emb.tet && first.face == face;
            row[gen[f]] += forward ? 1 : -1;
        }
        p.relations.push_back(std::move(row));
    }
    return p;
}

HomologySummary first_homology(const Triangulation& tri) {
    HomologyPresentation p = homology_presentation(tri);
    SmithForm s = smith_form(p.relations);
    return make_homology(p.generators - p.boundary_rank - s.rank, s.invariant_factors);
}

}  // namespace tri3
