// The interpolation couple (phi0, phi1, theta): the interpolated Orlicz
// function phi_theta, its inverse product formula, the normalization
// constants k_m, and the Luxemburg norm it induces on scalar sequences.
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include <twistlab/common.hpp>
#include <twistlab/conformal.hpp>
#include <twistlab/orlicz.hpp>
#include <twistlab/roots.hpp>

namespace twistlab {

class InterpolationCouple {
public:
    InterpolationCouple(OrliczFunction phi0, OrliczFunction phi1, double theta)
        : phi0_(std::move(phi0)),
          phi1_(std::move(phi1)),
          theta_(theta),
          conformal_(theta) {
        if (!(theta > 0.0 && theta < 1.0))
            throw std::domain_error("InterpolationCouple: theta must be in (0,1)");
        if (!phi1_.nondegenerate())
            throw std::domain_error("InterpolationCouple: phi1 must be nondegenerate");
        if (!phi0_.nondegenerate() && phi0_.kind() != OrliczKind::ess_sup)
            throw std::domain_error(
                "InterpolationCouple: phi0 must be nondegenerate or ess_sup");
    }

    const OrliczFunction& phi0() const { return phi0_; }
    const OrliczFunction& phi1() const { return phi1_; }
    double theta() const { return theta_; }
    const ConformalMap& conformal() const { return conformal_; }

    // phi_theta^{-1}(s) = phi0^{-1}(s)^{1-theta} * phi1^{-1}(s)^theta.
    double phi_theta_inverse(double s) const {
        if (s < 0.0) throw std::domain_error("phi_theta_inverse: s < 0");
        if (s == 0.0) return 0.0;
        return std::pow(phi0_.inverse(s), 1.0 - theta_) *
               std::pow(phi1_.inverse(s), theta_);
    }

    // The unique s with phi_theta_inverse(s) = t, by monotone bisection.
    double phi_theta(double t) const {
        if (t < 0.0) throw std::domain_error("phi_theta: t < 0");
        if (t == 0.0) return 0.0;
        return detail::invert_increasing(
            [this](double s) { return phi_theta_inverse(s); }, t);
    }

    // k_m = m! * (phi'(theta))^{m-1}, with phi the rotated conformal map.
    // Matching the (z-theta)^{m-1} coefficient of the g recursion forces this
    // value; it is real because the rotated derivative is.
    double k_constant(unsigned m) const {
        if (m < 1) throw std::invalid_argument("k_constant: need m >= 1");
        return std::tgamma(double(m) + 1.0) *
               std::pow(conformal_.derivative_at_center(), double(m) - 1.0);
    }

    // Luxemburg norm of a scalar sequence with respect to phi_theta.
    double sequence_norm(std::span<const complex> x) const {
        double top = 0.0;
        for (const complex& v : x) top = std::max(top, std::abs(v));
        if (top == 0.0) return 0.0;
        // Dividing out the largest modulus first makes the result exactly
        // homogeneous: lambda*x and x reduce to the same root-finding
        // problem, so the solver error cancels in the ratio.
        auto modular = [&](double rho) {
            double s = 0.0;
            for (const complex& v : x) {
                const double m = std::abs(v) / top;
                if (m > 0.0) s += phi_theta(m / rho);
            }
            return s;
        };
        return top * detail::luxemburg(modular, 1.0);
    }

private:
    OrliczFunction phi0_, phi1_;
    double theta_;
    ConformalMap conformal_;
};

} // namespace twistlab
