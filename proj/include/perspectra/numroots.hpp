#ifndef PERSPECTRA_NUMROOTS_HPP
#define PERSPECTRA_NUMROOTS_HPP

#include <complex>
#include <vector>

#include "perspectra/intpoly.hpp"

namespace perspectra {

/// All complex roots of p with multiplicity, by Durand-Kerner iteration on
/// the squarefree factors. Roots are sorted by (real, imag). Each returned
/// r satisfies |p(r)| <= 1e-8 * max|coeff| * max(1,|r|)^deg; failing that
/// the finder throws std::runtime_error("root finder did not converge").
std::vector<std::complex<double>> roots_numeric(const IntPoly& p);

}  // namespace perspectra

#endif
