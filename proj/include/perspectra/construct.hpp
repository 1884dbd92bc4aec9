#ifndef PERSPECTRA_CONSTRUCT_HPP
#define PERSPECTRA_CONSTRUCT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "perspectra/graph.hpp"
#include "perspectra/intpoly.hpp"
#include "perspectra/perpoly.hpp"

namespace perspectra {

/// Schwenk's identity for the coalescence of two rooted graphs:
/// pi(G1.G2) = pi(G1) pi(G2-r2) + pi(G1-r1) pi(G2) - x pi(G1-r1) pi(G2-r2).
/// Trees route through the rooted-tree recursion, so a large tree side
/// does not hit the engine caps.
IntPoly schwenk_coalescence_poly(const RootedGraph& g1, const RootedGraph& g2,
                                 const EngineLimits& limits = {});

/// H(G1, T) = pi(G1) pi(T') + k pi(G1 - r1) pi(T' - u') for the uniform
/// rooted tree described by spec; membership of the coalescence reduces
/// to this polynomial having purely imaginary roots.
IntPoly h_poly(const RootedGraph& g1, const RootedTreeSpec& spec,
               const EngineLimits& limits = {});

/// Which vertex of which host graph the coalescence is rooted at.
enum class HostRoot { K23deg3, K23deg2 };

/// Closed-form membership predicates:
///   K23deg3: (l <= 3 and l+k >= 4) or (l >= 4 and k >= 2l-4)
///   K23deg2: l+k >= 4 and l <= 2
bool membership_predicate(HostRoot host, int l, int k);

enum class ScanFamily {
    K23deg3xStarlike,
    K23deg3xPathlike,
    K23deg2xStarlike,
    K23deg2xPathlike,
    K33xStarlike,
    K33xPathlike,
};

const char* to_string(ScanFamily f);
ScanFamily parse_scan_family(const std::string& name);

/// The rooted host graph of a family (K_{3,3} is vertex-transitive; it is
/// rooted at vertex 0).
RootedGraph scan_host(ScanFamily f);
TreeShape scan_shape(ScanFamily f);

struct ScanGrid {
    ScanFamily family = ScanFamily::K23deg3xStarlike;
    int l_max = 0;
    int k_max = 0;
    std::vector<uint8_t> cells;  // (l, k) -> purely imaginary, l-major

    bool cell(int l, int k) const { return cells[static_cast<size_t>(l) * (k_max + 1) + k] != 0; }
};

/// Exact scan of the (l, k) grid; cells are independent and computed in
/// parallel, with a deterministic assembled result.
ScanGrid scan(ScanFamily family, int l_max, int k_max);
ScanGrid scan_serial(ScanFamily family, int l_max, int k_max);

/// Checks pi(G1 . T) == pi(T')^{k-1} * H(G1, T) coefficient-exact, building
/// the coalescence explicitly. Requires k >= 1.
bool verify_factorization(const RootedGraph& g1, const RootedTreeSpec& spec,
                          const EngineLimits& limits = {});

void write_scan_csv(const ScanGrid& grid, std::ostream& out);
void write_scan_svg(const ScanGrid& grid, std::ostream& out);

}  // namespace perspectra

#endif
