#include "perspectra/numroots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "perspectra/realroot.hpp"

namespace perspectra {

namespace {

constexpr int kMaxIterations = 1000;

std::vector<double> to_doubles(const IntPoly& p) {
    std::vector<double> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(static_cast<int>(i)).convert_to<double>();
    return c;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

// Simultaneous iteration on a squarefree factor (simple roots only).
std::vector<std::complex<double>> durand_kerner(const IntPoly& f) {
    const int n = f.degree();
    std::vector<std::complex<double>> z(n);
    if (n == 1) {
        z[0] = Rat(-f.coeff(0), f.coeff(1)).convert_to<double>();
        return z;
    }
    const std::vector<double> c = to_doubles(f);
    double maxc = 0.0;
    for (double v : c) maxc = std::max(maxc, std::fabs(v));
    const double radius = 1.0 + maxc / std::fabs(c.back());

    // initial guesses on a circle, rotated off the axes
    for (int j = 0; j < n; ++j) {
        double ang = 2.0 * M_PI * j / n + 0.4;
        z[j] = std::polar(radius, ang);
    }

    for (int it = 0; it < kMaxIterations; ++it) {
        double worst = 0.0;
        for (int j = 0; j < n; ++j) {
            std::complex<double> denom = c.back();
            for (int k = 0; k < n; ++k)
                if (k != j) denom *= z[j] - z[k];
            if (denom == 0.0) {
                z[j] += std::complex<double>(1e-6, 1e-6);
                worst = 1.0;
                continue;
            }
            std::complex<double> step = horner(c, z[j]) / denom;
            z[j] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[j])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

}  // namespace

std::vector<std::complex<double>> roots_numeric(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("roots_numeric: zero input");
    std::vector<std::complex<double>> roots;
    if (p.degree() == 0) return roots;

    const int m = p.low_degree();
    roots.assign(m, {0.0, 0.0});
    IntPoly r = p.shifted_down(m);

    for (const auto& sf : squarefree_decompose(r)) {
        if (sf.factor.degree() == 0) continue;
        auto zs = durand_kerner(sf.factor);
        for (const auto& z : zs)
            for (int k = 0; k < sf.multiplicity; ++k) roots.push_back(z);
    }

    // residual check against the original polynomial
    double maxc = 0.0;
    for (const auto& c : p.coeffs()) {
        double v = std::fabs(c.convert_to<double>());
        maxc = std::max(maxc, v);
    }
    for (const auto& z : roots) {
        double bound = 1e-8 * maxc * std::pow(std::max(1.0, std::abs(z)), p.degree());
        if (!(std::abs(p.evaluate(z)) <= bound))
            throw std::runtime_error("root finder did not converge");
    }

    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace perspectra
