#ifndef PERSPECTRA_PERPOLY_HPP
#define PERSPECTRA_PERPOLY_HPP

#include "perspectra/graph.hpp"
#include "perspectra/intpoly.hpp"

namespace perspectra {

/// The three independent routes to pi(G, x).
enum class EngineKind { Sachs, Expansion, Recursive };

/// Size guards per engine, configurable rather than scattered constants.
struct EngineLimits {
    int sachs_max = 20;
    int recursive_max = 20;
    int expansion_max = 14;
};

/// Permanental polynomial of g. All engines return identical, exact
/// coefficients; they differ only in how the work is organized:
///   Sachs      - enumerate vertex-disjoint unions of edges and cycles,
///   Expansion  - permanents of principal submatrices, one per subset,
///   Recursive  - vertex-deletion recursion with component memoization.
IntPoly per_poly(const Graph& g, EngineKind engine, const EngineLimits& limits = {});

/// Rooted-tree recursion, memoized on subtree shape. No size guard: trees
/// cost polynomial work. Throws if the input is not a tree.
IntPoly per_poly_rooted_tree(const RootedGraph& t);

IntPoly star_poly(int n);  // pi(K_{1,n}) = x^{n-1} (x^2 + n)
IntPoly path_poly(int n);  // pi(P_n), binomial closed form

/// pi of the theta graph, assembled from path polynomials.
IntPoly theta_poly(int a, int b, int c);

}  // namespace perspectra

#endif
