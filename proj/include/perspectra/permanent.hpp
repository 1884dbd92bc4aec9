#ifndef PERSPECTRA_PERMANENT_HPP
#define PERSPECTRA_PERMANENT_HPP

#include <cstdint>
#include <vector>

#include "perspectra/graph.hpp"
#include "perspectra/intpoly.hpp"

namespace perspectra {

/// Square matrix held column-wise as row bitmasks, the working form for
/// the Ryser kernel on 0/1 inputs.
struct BitMatrix {
    int n = 0;
    std::vector<uint64_t> cols;  // cols[j] bit i set <=> a(i,j) == 1

    static BitMatrix from_graph(const Graph& g);
    /// Principal submatrix of the adjacency matrix on the vertices in mask.
    static BitMatrix from_graph_subset(const Graph& g, uint64_t mask);
};

/// Exact permanent by Ryser inclusion-exclusion with Gray-code subset
/// iteration, O(2^n * n). Guarded to order <= 30.
Int permanent(const BitMatrix& m);

/// Serial reference for the kernel above; identical results.
Int permanent_serial(const BitMatrix& m);

/// Validating entry point for plain 0/1 matrices. Throws on non-square
/// input; entries outside {0,1} are rejected.
Int permanent(const std::vector<std::vector<int>>& m);

}  // namespace perspectra

#endif
