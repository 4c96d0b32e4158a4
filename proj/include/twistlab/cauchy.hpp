// Contour-integral Taylor coefficient oracle, independent of the jet
// arithmetic it cross-checks.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include <twistlab/common.hpp>

namespace twistlab {

// Trapezoidal approximation of (1/2 pi i) \oint f(z)/(z-theta)^{j+1} dz on
// the circle of radius r about theta. The trapezoid rule on a circle
// converges geometrically for analytic integrands. Requires r strictly
// inside the strip: r < min(theta, 1 - theta).
inline complex cauchy_coefficient(const std::function<complex(complex)>& f,
                                  double theta, unsigned j, double r,
                                  unsigned quadrature_points = 256) {
    if (!(r > 0.0) || r >= std::min(theta, 1.0 - theta))
        throw std::domain_error(
            "cauchy_coefficient: radius reaches the strip boundary");
    if (quadrature_points < 64)
        throw std::invalid_argument("cauchy_coefficient: need >= 64 points");
    const double two_pi = 2.0 * std::numbers::pi;
    complex acc{0.0, 0.0};
    for (unsigned k = 0; k < quadrature_points; ++k) {
        const double phi = two_pi * double(k) / double(quadrature_points);
        const complex e = std::polar(1.0, phi);
        acc += f(theta + r * e) * std::polar(1.0, -double(j) * phi);
    }
    return acc / (double(quadrature_points) * std::pow(r, double(j)));
}

// Default oracle radius: half the distance from theta to the strip boundary.
inline double default_oracle_radius(double theta) {
    return 0.5 * std::min(theta, 1.0 - theta);
}

} // namespace twistlab
