#include "perspectra/realroot.hpp"

#include <stdexcept>

namespace perspectra {

namespace {

int sign_of(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

// Pseudo-remainder scaled by a positive constant: returns r with
// r = c * (a mod b) for some c > 0. Keeps everything in integers.
IntPoly prem_positive(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const Int& bl = b.leading();
    int steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Int rl = r.leading();
        r = r.scaled(bl) - b.scaled(rl).shifted_up(shift);
        ++steps;
    }
    if (bl < 0 && (steps & 1)) r = -r;
    return r;
}

// Content removal without touching the sign of the polynomial.
IntPoly primitive_same_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = p.content();
    if (g == 1) return p;
    std::vector<Int> c = p.coeffs();
    for (auto& v : c) v /= g;
    return IntPoly(std::move(c));
}

IntPoly gcd_primitive(IntPoly a, IntPoly b) {
    a = a.primitive_positive();
    b = b.primitive_positive();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = prem_positive(a, b).primitive_positive();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_squarefree(const IntPoly& p) {
    if (p.degree() <= 0) return true;
    return gcd_primitive(p, p.derivative()).degree() == 0;
}

int sign_at(const IntPoly& s, const Extended& e) {
    if (s.is_zero()) return 0;
    if (e.is_pos_inf()) return sign_of(s.leading());
    if (e.is_neg_inf()) {
        int sl = sign_of(s.leading());
        return (s.degree() & 1) ? -sl : sl;
    }
    Rat v = s.evaluate(e.value());
    return v == 0 ? 0 : (v < 0 ? -1 : 1);
}

// Sign variations with zero entries skipped. Evaluating at an exact root
// of a chain member this equals the right-sided limit, which is what
// makes the count come out over half-open intervals (lo, hi].
int sign_variations(const std::vector<IntPoly>& chain, const Extended& e) {
    int vars = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sign_at(s, e);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++vars;
        prev = sg;
    }
    return vars;
}

}  // namespace

bool Extended::operator<(const Extended& o) const {
    if (is_neg_inf()) return !o.is_neg_inf();
    if (is_pos_inf()) return false;
    if (o.is_pos_inf()) return true;
    if (o.is_neg_inf()) return false;
    return value_ < o.value_;
}

std::vector<SquarefreeFactor> squarefree_decompose(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decompose: zero input");
    std::vector<SquarefreeFactor> out;
    IntPoly f = p.primitive_positive();
    if (f.degree() == 0) return out;

    // Yun's algorithm. All divisions below are exact over the integers
    // (the divisors are primitive), so no rescaling happens mid-run.
    IntPoly g = gcd_primitive(f, f.derivative());
    if (g.degree() == 0) {
        out.push_back({f, 1});
        return out;
    }
    IntPoly w = f.divided_exact(g);
    IntPoly z = f.derivative().divided_exact(g) - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        IntPoly a = gcd_primitive(w, z);
        if (a.degree() > 0) out.push_back({a, i});
        w = w.divided_exact(a);
        z = z.divided_exact(a) - w.derivative();
        ++i;
    }
    return out;
}

int sturm_count(const IntPoly& p, const Extended& lo, const Extended& hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero input");
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: requires lo < hi");
    if (p.degree() == 0) return 0;
    if (!is_squarefree(p)) throw std::invalid_argument("sturm_count: requires squarefree polynomial");

    // Signed pseudo-remainder chain; members are rescaled only by
    // positive constants so the variation counts stay those of the
    // classical Sturm sequence.
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_positive());
    chain.push_back(primitive_same_sign(chain[0].derivative()));
    for (;;) {
        const IntPoly& s0 = chain[chain.size() - 2];
        const IntPoly& s1 = chain.back();
        IntPoly nxt = primitive_same_sign(-prem_positive(s0, s1));
        if (nxt.is_zero()) break;
        chain.push_back(std::move(nxt));
    }
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::pair<bool, RootCountCertificate> all_roots_real_nonneg(const IntPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("all_roots_real_nonneg: zero input");
    RootCountCertificate cert;
    cert.total_degree = q.degree();

    int m = q.low_degree();  // multiplicity of the root 0, always nonnegative real
    IntPoly r = q.shifted_down(m);
    if (m > 0) cert.squarefree_factors.push_back({IntPoly::x(), m});

    int real = m, nonneg = m;
    if (r.degree() > 0) {
        for (auto& sf : squarefree_decompose(r)) {
            int rc = sturm_count(sf.factor, Extended::neg_inf(), Extended::pos_inf());
            int nc = sturm_count(sf.factor, Extended::neg_inf(), Extended::at(Rat(0)));
            real += rc * sf.multiplicity;
            nonneg += (rc - nc) * sf.multiplicity;
            cert.squarefree_factors.push_back(std::move(sf));
        }
    }
    cert.real_root_count_with_multiplicity = real;
    cert.nonneg_real_root_count_with_multiplicity = nonneg;
    return {nonneg == cert.total_degree, std::move(cert)};
}

Int cubic_discriminant(const Int& a, const Int& b, const Int& c, const Int& d) {
    if (a == 0) throw std::invalid_argument("cubic_discriminant: not a cubic");
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

int descartes_sign_changes(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("descartes_sign_changes: zero input");
    int vars = 0, prev = 0;
    for (int d = p.degree(); d >= 0; --d) {
        int sg = sign_of(p.coeff(d));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++vars;
        prev = sg;
    }
    return vars;
}

}  // namespace perspectra
