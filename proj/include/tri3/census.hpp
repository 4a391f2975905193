#pragma once

#include <string>
#include <vector>

#include "tri3/triangulation.hpp"

namespace tri3 {

struct CensusSpec {
    std::size_t n = 0;
    bool internal = false;    // every face glued
    bool orientable = false;  // orientable only
    bool finite = false;      // no ideal vertices
};

/// Whether a triangulation passes the census filters (connectedness and
/// validity are always required).
bool census_accepts(const Triangulation& tri, const CensusSpec& spec);

/// Connected face-pairing multigraphs on n nodes (each node of degree 4 if
/// `closed`, at most 4 otherwise), one per isomorphism class. Entry [i][j]
/// counts face pairs between tetrahedra i and j; [i][i] counts self-pairs.
std::vector<std::vector<std::vector<int>>> face_pairing_graphs(std::size_t n, bool closed);

/// One signature per isomorphism class of connected valid triangulations with
/// n tetrahedra satisfying the filters, sorted.
std::vector<std::string> enumerate_census(const CensusSpec& spec, unsigned threads = 0);

}  // namespace tri3
