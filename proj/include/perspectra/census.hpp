#ifndef PERSPECTRA_CENSUS_HPP
#define PERSPECTRA_CENSUS_HPP

#include <vector>

#include "perspectra/graph.hpp"

namespace perspectra {

/// One representative per isomorphism class of connected bipartite graphs
/// on n vertices (guarded to n <= 9). Generated by iterating bipartition
/// sizes (a, n-a) and all biadjacency edge subsets, with canonical-form
/// deduplication. Output order is deterministic: ascending part size,
/// then ascending representative edge mask.
std::vector<Graph> connected_bipartite_classes(int n);

/// Serial reference for the OpenMP enumeration above; must produce the
/// identical list.
std::vector<Graph> connected_bipartite_classes_serial(int n);

}  // namespace perspectra

#endif
