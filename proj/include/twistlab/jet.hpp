// Truncated Taylor-series (jet) arithmetic at a fixed real center.
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <twistlab/common.hpp>

namespace twistlab {

// z |-> sum_j c_j (z - center)^j, truncated at a fixed order. Arithmetic is
// only defined between jets with equal center and order.
class Jet {
public:
    Jet(double center, std::size_t order)
        : center_(center), c_(order + 1, complex{0.0, 0.0}) {}

    Jet(double center, std::vector<complex> coeffs)
        : center_(center), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("Jet: empty coefficients");
    }

    double center() const { return center_; }
    std::size_t order() const { return c_.size() - 1; }
    const std::vector<complex>& coefficients() const { return c_; }
    complex operator[](std::size_t j) const { return c_[j]; }
    complex& operator[](std::size_t j) { return c_[j]; }

    // Horner evaluation of the truncated polynomial.
    complex eval(complex z) const {
        const complex u = z - center_;
        complex acc{0.0, 0.0};
        for (std::size_t j = c_.size(); j-- > 0;) acc = acc * u + c_[j];
        return acc;
    }

private:
    friend void check_compatible(const Jet& a, const Jet& b);
    double center_;
    std::vector<complex> c_;
};

inline void check_compatible(const Jet& a, const Jet& b) {
    if (a.center_ != b.center_ || a.c_.size() != b.c_.size())
        throw std::invalid_argument("Jet: center/order mismatch");
}

inline Jet operator+(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    Jet r = a;
    for (std::size_t j = 0; j <= r.order(); ++j) r[j] += b[j];
    return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    Jet r = a;
    for (std::size_t j = 0; j <= r.order(); ++j) r[j] -= b[j];
    return r;
}

inline Jet operator*(complex lambda, const Jet& a) {
    Jet r = a;
    for (std::size_t j = 0; j <= r.order(); ++j) r[j] *= lambda;
    return r;
}

// Cauchy product truncated at the common order.
inline Jet operator*(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    Jet r(a.center(), a.order());
    for (std::size_t j = 0; j <= r.order(); ++j)
        for (std::size_t i = 0; i <= j; ++i) r[j] += a[i] * b[j - i];
    return r;
}

inline Jet jet_pow(const Jet& a, unsigned k) {
    Jet r(a.center(), a.order());
    r[0] = 1.0;
    for (unsigned i = 0; i < k; ++i) r = r * a;
    return r;
}

// Power-series quotient; requires a nonzero constant term in the divisor.
inline Jet jet_div(const Jet& num, const Jet& den) {
    check_compatible(num, den);
    if (den[0] == complex{0.0, 0.0})
        throw std::invalid_argument("jet_div: divisor has zero constant term");
    Jet q(num.center(), num.order());
    for (std::size_t j = 0; j <= q.order(); ++j) {
        complex acc = num[j];
        for (std::size_t i = 0; i < j; ++i) acc -= q[i] * den[j - i];
        q[j] = acc / den[0];
    }
    return q;
}

// Jet at theta of z |-> s * a^{1-z} * b^z for positive a, b, with |s| in
// {0, 1}. Powers of positive reals use the real logarithm, so c_j =
// s * a^{1-theta} b^theta * ln(b/a)^j / j!. For s = 0 the jet is zero.
inline Jet two_point_power_jet(double a, double b, complex s, double theta,
                               std::size_t order) {
    Jet r(theta, order);
    if (s == complex{0.0, 0.0}) return r;
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("two_point_power_jet: need a, b > 0");
    const double lr = std::log(b) - std::log(a);
    complex term = s * std::exp((1.0 - theta) * std::log(a) + theta * std::log(b));
    for (std::size_t j = 0; j <= order; ++j) {
        r[j] = term;
        term *= lr / double(j + 1);
    }
    return r;
}

} // namespace twistlab
