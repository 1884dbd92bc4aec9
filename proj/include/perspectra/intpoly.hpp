#ifndef PERSPECTRA_INTPOLY_HPP
#define PERSPECTRA_INTPOLY_HPP

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace perspectra {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored in ascending degree order. The zero polynomial
/// has an empty coefficient vector; otherwise the top coefficient is
/// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long long> ascending_coeffs);
    explicit IntPoly(std::vector<Int> ascending_coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{1}; }
    static IntPoly x() { return IntPoly{0, 1}; }
    static IntPoly constant(Int c);
    static IntPoly monomial(Int c, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Int& coeff(int d) const;  // 0 outside the stored range
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;

    // index of the lowest nonzero coefficient (multiplicity of the root 0)
    int low_degree() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Int& k, IntPoly p) { return p.scaled(k); }

    IntPoly scaled(const Int& k) const;
    IntPoly pow(unsigned e) const;
    IntPoly shifted_up(int m) const;    // multiply by x^m, m >= 0
    IntPoly shifted_down(int m) const;  // divide by x^m; requires divisibility
    IntPoly derivative() const;

    Int evaluate(const Int& at) const;
    Rat evaluate(const Rat& at) const;
    std::complex<double> evaluate(std::complex<double> at) const;

    // gcd of |coefficients| (0 for the zero polynomial)
    Int content() const;
    // p / content, sign fixed so the leading coefficient is positive
    IntPoly primitive_positive() const;

    // exact division; throws std::domain_error if d does not divide *this
    IntPoly divided_exact(const IntPoly& d) const;

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    /// Text form in descending powers, e.g. "x^5+6*x^3+12*x".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Int> c_;
};

}  // namespace perspectra

#endif
