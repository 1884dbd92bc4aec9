#include "perspectra/spectra.hpp"

#include <stdexcept>

#include "perspectra/numroots.hpp"

namespace perspectra {

namespace {

// b_k = 0 for every odd k, i.e. all nonzero coefficients share the parity
// of the degree.
bool coeffs_even_parity(const IntPoly& p) {
    const int d = p.degree();
    for (int e = 0; e <= d; ++e)
        if (p.coeff(e) != 0 && ((d - e) & 1)) return false;
    return true;
}

// r must be x-free and even; returns q(y) = r_even(-y) with positive lead.
IntPoly reduce_to_y(const IntPoly& r) {
    std::vector<Int> q(static_cast<size_t>(r.degree() / 2) + 1, Int(0));
    for (int e = 0; e <= r.degree(); e += 2) {
        Int c = r.coeff(e);
        if ((e / 2) & 1) c = -c;  // substitute y -> -y
        q[static_cast<size_t>(e / 2)] = std::move(c);
    }
    IntPoly res(std::move(q));
    if (res.leading() < 0) res = -res;
    return res;
}

}  // namespace

PerSpecReport classify_perspec(const IntPoly& p, bool with_numeric_roots) {
    if (p.is_zero()) throw std::invalid_argument("classify_perspec: zero input");
    PerSpecReport rep;
    rep.poly = p;
    rep.zero_multiplicity = p.low_degree();
    rep.is_bipartite_by_coeffs = coeffs_even_parity(p);

    if (rep.is_bipartite_by_coeffs) {
        IntPoly r = p.shifted_down(rep.zero_multiplicity);
        if (r.degree() == 0) {
            rep.is_purely_imaginary = true;  // p = c x^n, all roots zero
        } else {
            IntPoly q = reduce_to_y(r);
            auto [ok, cert] = all_roots_real_nonneg(q);
            rep.is_purely_imaginary = ok;
            rep.y_certificate = std::move(cert);
        }
    }
    if (with_numeric_roots) rep.numeric_roots = roots_numeric(p);
    return rep;
}

PerSpecReport is_in_G(const Graph& g, bool with_numeric_roots, const EngineLimits& limits) {
    return classify_perspec(per_poly(g, EngineKind::Sachs, limits), with_numeric_roots);
}

RootStructureReport verify_root_structure(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("verify_root_structure: zero input");
    RootStructureReport rep;
    rep.coeff_parity_uniform = coeffs_even_parity(p);

    const int m = p.low_degree();
    IntPoly r = p.shifted_down(m);
    int negatives = 0, reals = 0;
    if (r.degree() > 0) {
        for (const auto& sf : squarefree_decompose(r)) {
            negatives += sf.multiplicity *
                         sturm_count(sf.factor, Extended::neg_inf(), Extended::at(Rat(0)));
            reals += sf.multiplicity *
                     sturm_count(sf.factor, Extended::neg_inf(), Extended::pos_inf());
        }
    }
    rep.no_negative_real_root = negatives == 0;
    rep.no_real_root_except_zero = reals == 0;
    rep.real_root_count_with_multiplicity = m + reals;
    return rep;
}

}  // namespace perspectra
