#ifndef PERSPECTRA_REALROOT_HPP
#define PERSPECTRA_REALROOT_HPP

#include <utility>
#include <vector>

#include "perspectra/intpoly.hpp"

namespace perspectra {

struct SquarefreeFactor {
    IntPoly factor;    // primitive, positive leading coefficient
    int multiplicity;  // >= 1
};

/// Yun decomposition: p = c * prod factor_i^multiplicity_i with the
/// factors squarefree and pairwise coprime. Throws on zero input.
std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& p);

/// An endpoint for root counting: a rational number or +-infinity.
class Extended {
public:
    static Extended neg_inf() { return Extended(-1); }
    static Extended pos_inf() { return Extended(+1); }
    static Extended at(Rat v) { Extended e(0); e.value_ = std::move(v); return e; }

    bool is_neg_inf() const { return kind_ < 0; }
    bool is_pos_inf() const { return kind_ > 0; }
    bool is_finite() const { return kind_ == 0; }
    const Rat& value() const { return value_; }

    bool operator<(const Extended& o) const;

private:
    explicit Extended(int k) : kind_(k) {}
    int kind_;
    Rat value_;
};

/// Number of distinct real roots of a squarefree p in (lo, hi], counted
/// by a Sturm chain over exact integer arithmetic.
/// Throws if p is zero or not squarefree, or if lo >= hi.
int sturm_count(const IntPoly& p, const Extended& lo, const Extended& hi);

struct RootCountCertificate {
    int total_degree = 0;
    int real_root_count_with_multiplicity = 0;
    int nonneg_real_root_count_with_multiplicity = 0;
    std::vector<SquarefreeFactor> squarefree_factors;
};

/// True iff every complex root of q is real and >= 0 (with multiplicity).
/// The certificate records the per-factor evidence.
std::pair<bool, RootCountCertificate> all_roots_real_nonneg(const IntPoly& q);

/// Discriminant of a*x^3 + b*x^2 + c*x + d; nonnegative exactly when all
/// three roots are real. Throws if a == 0.
Int cubic_discriminant(const Int& a, const Int& b, const Int& c, const Int& d);

/// Sign changes between consecutive nonzero coefficients in descending
/// power order (Descartes bound on positive roots). Throws on zero input.
int descartes_sign_changes(const IntPoly& p);

}  // namespace perspectra

#endif
