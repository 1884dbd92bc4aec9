#ifndef PERSPECTRA_SPECTRA_HPP
#define PERSPECTRA_SPECTRA_HPP

#include <complex>
#include <optional>
#include <vector>

#include "perspectra/graph.hpp"
#include "perspectra/intpoly.hpp"
#include "perspectra/perpoly.hpp"
#include "perspectra/realroot.hpp"

namespace perspectra {

/// Exact classification of a polynomial's root structure with respect to
/// the imaginary axis, plus optional numeric roots for display.
struct PerSpecReport {
    IntPoly poly;
    int zero_multiplicity = 0;
    bool is_purely_imaginary = false;
    /// Certificate for q(y): the reduced polynomial whose roots must all
    /// be nonnegative real for the verdict to hold. Empty when the parity
    /// short-circuit already rejected.
    RootCountCertificate y_certificate;
    std::optional<std::vector<std::complex<double>>> numeric_roots;
    /// Coefficient test: b_k = 0 for every odd k.
    bool is_bipartite_by_coeffs = false;
};

/// Decides whether every root of p lies on the imaginary axis (zero
/// included), entirely in integer arithmetic:
///   1. reject unless all nonzero coefficients sit at degrees of one
///      parity (odd-k coefficients vanish),
///   2. strip x^m,
///   3. substitute y = x^2 and flip to q(y) = r(-y),
///   4. accept iff q has all roots real and >= 0.
PerSpecReport classify_perspec(const IntPoly& p, bool with_numeric_roots = false);

/// Membership of the graph in the purely-imaginary class: classification
/// of pi(G, x) from the Sachs engine.
PerSpecReport is_in_G(const Graph& g, bool with_numeric_roots = false,
                      const EngineLimits& limits = {});

struct RootStructureReport {
    bool no_negative_real_root = false;
    bool no_real_root_except_zero = false;
    /// All nonzero coefficients at degrees of one parity; the coefficient-
    /// level face of spectrum symmetry across both axes.
    bool coeff_parity_uniform = false;
    int real_root_count_with_multiplicity = 0;
};

RootStructureReport verify_root_structure(const IntPoly& p);

}  // namespace perspectra

#endif
