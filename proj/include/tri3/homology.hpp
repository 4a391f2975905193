#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tri3/integer.hpp"
#include "tri3/triangulation.hpp"

namespace tri3 {

/// A finitely generated abelian group Z^rank + Z_{d1} + ... with d1 | d2 | ...
struct HomologySummary {
    std::size_t rank = 0;
    std::vector<Integer> torsion;  // invariant factors, all > 1
    std::size_t t2 = 0;            // number of even invariant factors
    std::size_t t3 = 0;            // number of invariant factors divisible by 3

    bool trivial() const { return rank == 0 && torsion.empty(); }
    /// Renders e.g. "0", "Z", "2 Z + Z_2 + Z_6".
    std::string str() const;
    friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// Invariant factors (> 1) of an integer matrix, plus its rank.
struct SmithForm {
    std::size_t rank = 0;
    std::vector<Integer> invariant_factors;  // nonzero diagonal entries with |d| > 1, sorted by divisibility
};
SmithForm smith_form(std::vector<std::vector<Integer>> matrix);

/// Builds the abelian group summary from a free rank and torsion invariants.
HomologySummary make_homology(std::size_t rank, std::vector<Integer> torsion);

/// First homology of the underlying space, from the dual presentation:
/// generators are internal faces, relations come from internal edges.
/// Throws InvalidInput for invalid triangulations.
HomologySummary first_homology(const Triangulation& tri);

/// Relation matrix used by first_homology (rows: internal edges, columns:
/// internal faces). Exposed for testing against independent oracles.
struct HomologyPresentation {
    std::size_t generators = 0;
    std::size_t boundary_rank = 0;  // rank of the generator -> tetrahedron map
    std::vector<std::vector<Integer>> relations;
};
HomologyPresentation homology_presentation(const Triangulation& tri);

}  // namespace tri3
