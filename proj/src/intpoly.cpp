#include "perspectra/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace perspectra {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::initializer_list<long long> ascending_coeffs) {
    c_.reserve(ascending_coeffs.size());
    for (long long v : ascending_coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<Int> ascending_coeffs) : c_(std::move(ascending_coeffs)) {
    normalize();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(Int c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    IntPoly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, kZero);
        p.c_.back() = std::move(c);
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(d)];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

int IntPoly::low_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly::zero();
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Int& k) const {
    if (k == 0) return zero();
    IntPoly r = *this;
    for (auto& c : r.c_) c *= k;
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly base = *this;
    IntPoly acc = one();
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

IntPoly IntPoly::shifted_up(int m) const {
    if (m < 0) throw std::invalid_argument("shifted_up: negative shift");
    if (is_zero() || m == 0) return *this;
    std::vector<Int> out(static_cast<size_t>(m), kZero);
    out.insert(out.end(), c_.begin(), c_.end());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::shifted_down(int m) const {
    if (m < 0) throw std::invalid_argument("shifted_down: negative shift");
    if (m == 0) return *this;
    if (low_degree() < m) throw std::domain_error("shifted_down: not divisible by x^m");
    return IntPoly(std::vector<Int>(c_.begin() + m, c_.end()));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return zero();
    std::vector<Int> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(out));
}

Int IntPoly::evaluate(const Int& at) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Rat IntPoly::evaluate(const Rat& at) const {
    Rat acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + Rat(c_[i]);
    return acc;
}

std::complex<double> IntPoly::evaluate(std::complex<double> at) const {
    std::complex<double> acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i].convert_to<double>();
    return acc;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) {
        if (c == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_positive() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    IntPoly r = *this;
    for (auto& c : r.c_) c /= g;
    return r;
}

IntPoly IntPoly::divided_exact(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("divided_exact: division by zero polynomial");
    if (is_zero()) return zero();
    if (degree() < d.degree()) throw std::domain_error("divided_exact: not divisible");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(c_.size() - d.c_.size() + 1, Int(0));
    const Int& lead = d.leading();
    for (size_t qi = quot.size(); qi-- > 0;) {
        Int& top = rem[qi + d.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("divided_exact: not divisible");
        Int q = top / lead;
        for (size_t j = 0; j < d.c_.size(); ++j) rem[qi + j] -= q * d.c_[j];
        quot[qi] = std::move(q);
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("divided_exact: not divisible");
    return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        Int mag = boost::multiprecision::abs(c);
        if (d == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'x';
            if (d > 1) os << '^' << d;
        }
    }
    return os.str();
}

}  // namespace perspectra
