// Conformal map from the unit strip to the closed disc, rotated so that its
// derivative at the interpolation point is real and positive.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <twistlab/common.hpp>
#include <twistlab/jet.hpp>

namespace twistlab {

// chi_theta(z) = (e^{i pi z} - e^{i pi theta}) / (e^{i pi z} - e^{-i pi theta})
// maps S = {0 <= Re z <= 1} onto the closed unit disc with chi_theta(theta)=0.
// The stored map is mu * chi_theta with mu = |chi'(theta)| / chi'(theta), so
// that the derivative at theta equals pi / (2 sin(pi theta)) > 0 and the map
// is real on the interval (0, 1).
class ConformalMap {
public:
    explicit ConformalMap(double theta) : theta_(theta) {
        if (!(theta > 0.0 && theta < 1.0))
            throw std::domain_error("ConformalMap: theta must be in (0,1)");
        const double pi = std::numbers::pi;
        a_ = std::polar(1.0, pi * theta);   // e^{i pi theta}
        b_ = std::conj(a_);                 // e^{-i pi theta}
        // chi'(theta) = i pi e^{i pi theta} / (e^{i pi theta} - e^{-i pi theta})
        const complex dchi = complex{0.0, pi} * a_ / (a_ - b_);
        deriv_ = std::abs(dchi);            // pi / (2 sin(pi theta))
        rotation_ = deriv_ / dchi;
    }

    double theta() const { return theta_; }
    complex rotation() const { return rotation_; }

    // Derivative of the rotated map at theta; real and positive.
    double derivative_at_center() const { return deriv_; }

    // Rotated map at any point of the strip.
    complex operator()(complex z) const {
        const double pi = std::numbers::pi;
        const complex w = std::exp(complex{0.0, pi} * z);
        return rotation_ * (w - a_) / (w - b_);
    }

    // Value at the boundary point side + it; modulus 1.
    complex boundary(int side, double t) const {
        if (side != 0 && side != 1)
            throw std::invalid_argument("ConformalMap::boundary: side not in {0,1}");
        // e^{i pi (side + it)} = (+-1) e^{-pi t}, real; the numerator and
        // denominator are then complex conjugates, hence equal moduli.
        const double w = (side == 0 ? 1.0 : -1.0) * std::exp(-std::numbers::pi * t);
        return rotation_ * (w - a_) / (w - b_);
    }

    // Jet at theta of the rotated map: constant term 0, linear term real
    // positive. Built from the series of e^{i pi z} by power-series division.
    Jet jet(std::size_t order) const {
        const double pi = std::numbers::pi;
        Jet w(theta_, order); // e^{i pi z} about theta
        complex term = a_;
        for (std::size_t j = 0; j <= order; ++j) {
            w[j] = term;
            term *= complex{0.0, pi} / double(j + 1);
        }
        Jet num = w, den = w;
        num[0] -= a_;
        den[0] -= b_;
        Jet r = rotation_ * jet_div(num, den);
        r[0] = complex{0.0, 0.0}; // exactly zero by construction
        r[1] = complex{r[1].real(), 0.0};
        return r;
    }

private:
    double theta_;
    complex a_, b_;
    complex rotation_;
    double deriv_;
};

} // namespace twistlab
