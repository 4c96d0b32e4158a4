// The per-coordinate recursion g_x on the strip: its jet at theta, pointwise
// evaluation, and the quasi-Young functions phi_{theta,n} built from it.
//
// Vectors (x_{m-1}, ..., x_0) are stored top-component first: x[0] = x_{m-1}.
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <twistlab/couple.hpp>
#include <twistlab/jet.hpp>

namespace twistlab {

namespace detail {

// Log-ratio ln(phi1^{-1}/phi0^{-1}) at phi_theta(|x|).
inline double g_log_ratio(const InterpolationCouple& cp, double mod) {
    const double v = cp.phi_theta(mod);
    return std::log(cp.phi1().inverse(v)) - std::log(cp.phi0().inverse(v));
}

// Scalar base case: jet of z |-> a^{1-z} b^z sgn(x) with a, b the two
// endpoint preimages of phi_theta(|x|). The value at theta is
// sgn(x) a^{1-theta} b^theta = sgn(x) phi_theta^{-1}(phi_theta(|x|)) = x,
// so the coefficients are x ln(b/a)^j / j! with no inversion round-trip.
inline Jet g_scalar_jet(const InterpolationCouple& cp, complex x,
                        std::size_t order) {
    Jet r(cp.theta(), order);
    if (x == complex{0.0, 0.0}) return r;
    const double lr = g_log_ratio(cp, std::abs(x));
    complex term = x;
    for (std::size_t j = 0; j <= order; ++j) {
        r[j] = term;
        term *= lr / double(j + 1);
    }
    return r;
}

// Conformal-map power phi^{m-1} rescaled so its leading (degree m-1)
// coefficient is exactly 1. Coefficients below m-1 are exact zeros, so
// multiplying by this jet reproduces a leading coefficient bit-for-bit.
inline Jet unit_lead_phi_pow(const InterpolationCouple& cp, std::size_t m,
                             std::size_t order) {
    Jet p = jet_pow(cp.conformal().jet(order), unsigned(m - 1));
    const complex lead = p[m - 1];
    for (std::size_t j = 0; j <= order; ++j) p[j] = p[j] / lead;
    p[m - 1] = {1.0, 0.0};
    return p;
}

inline complex g_scalar_eval(const InterpolationCouple& cp, complex x,
                             complex z) {
    if (x == complex{0.0, 0.0}) return {0.0, 0.0};
    return x * std::exp((z - cp.theta()) * g_log_ratio(cp, std::abs(x)));
}

} // namespace detail

// Jet at theta of g_x for x = (x_{m-1}, ..., x_0) in C^m. Coefficients
// 0..m-1 reproduce the components of x. Requires order >= m.
inline Jet g_jet(const InterpolationCouple& cp, std::span<const complex> x,
                 std::size_t order) {
    const std::size_t m = x.size();
    if (m == 0) throw std::invalid_argument("g_jet: empty vector");
    if (order < m) throw std::invalid_argument("g_jet: order below block size");
    if (m == 1) return detail::g_scalar_jet(cp, x[0], order);
    const Jet prefix = g_jet(cp, x.subspan(1), order);
    const double fact = std::tgamma(double(m) + 1.0);
    // The correction (phi^{m-1}/k_m) g_{m!(x - prefix)} has leading
    // coefficient exactly x - prefix[m-1]: the factors m! and (phi')^{m-1}
    // cancel against k_m. Computing it in that cancelled form with a
    // unit-lead phi power and a compensated difference keeps coefficient
    // m-1 equal to x to working precision even when prefix[m-1] is huge.
    complex defect, comp;
    detail::two_diff(x[0], prefix[m - 1], defect, comp);
    if (defect == complex{0.0, 0.0} && comp == complex{0.0, 0.0})
        return prefix;
    const double mod = std::abs(fact * defect);
    const double lr = mod == 0.0 ? 0.0 : detail::g_log_ratio(cp, mod);
    Jet h(cp.theta(), order);
    complex term = defect;
    for (std::size_t j = 0; j <= order; ++j) {
        h[j] = term;
        term *= lr / double(j + 1);
    }
    Jet out = prefix + detail::unit_lead_phi_pow(cp, m, order) * h;
    out[m - 1] += comp;
    return out;
}

// Pointwise evaluation of the same recursion anywhere on the strip. The
// Taylor coefficients the recursion depends on are taken from the jets at
// theta, so this is an independent route to the same function.
inline complex g_eval(const InterpolationCouple& cp, std::span<const complex> x,
                      complex z) {
    const std::size_t m = x.size();
    if (m == 0) throw std::invalid_argument("g_eval: empty vector");
    if (m == 1) return detail::g_scalar_eval(cp, x[0], z);
    const Jet prefix = g_jet(cp, x.subspan(1), m);
    const complex defect =
        std::tgamma(double(m) + 1.0) * (x[0] - prefix[m - 1]);
    return g_eval(cp, x.subspan(1), z) +
           std::pow(cp.conformal()(z), double(m - 1)) /
               cp.k_constant(unsigned(m)) *
               detail::g_scalar_eval(cp, defect, z);
}

// Boundary values g_x(side + it), side in {0, 1}.
inline complex g_boundary_eval(const InterpolationCouple& cp,
                               std::span<const complex> x, int side, double t) {
    if (side != 0 && side != 1)
        throw std::invalid_argument("g_boundary_eval: side not in {0,1}");
    return g_eval(cp, x, complex{double(side), t});
}

// The quasi-Young function phi_{theta,n} on C^n:
//   phi_{theta,1}(x_0) = phi_theta(|x_0|)
//   phi_{theta,n}(x)   = phi_{theta,n-1}(prefix)
//                        + phi_theta(|x_{n-1} - g_prefix[n-1; theta]|)
inline double phi_theta_n(const InterpolationCouple& cp,
                          std::span<const complex> x) {
    const std::size_t n = x.size();
    if (n == 0) throw std::invalid_argument("phi_theta_n: empty vector");
    if (n == 1) return cp.phi_theta(std::abs(x[0]));
    const auto prefix = x.subspan(1);
    const Jet gp = g_jet(cp, prefix, n);
    return phi_theta_n(cp, prefix) +
           cp.phi_theta(std::abs(x[0] - gp[n - 1]));
}

} // namespace twistlab
