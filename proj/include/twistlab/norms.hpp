// The two quasinorms on derived-order vectors: the Luxemburg quasinorm of
// the Fenchel-Orlicz space of phi_{theta,n}, and the recursive twisted-sum
// quasinorm; plus the complexification norm and the Re/Im split.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include <twistlab/block_vector.hpp>
#include <twistlab/couple.hpp>
#include <twistlab/g_recursion.hpp>
#include <twistlab/omega.hpp>
#include <twistlab/roots.hpp>

namespace twistlab {

// inf{rho > 0 : sum_k phi_{theta,n}(x(k)/rho) <= 1}. phi_{theta,n} is not
// homogeneous for n >= 2, so each candidate rho requires a fresh evaluation
// of every block.
inline double fenchel_orlicz_norm(const InterpolationCouple& cp,
                                  const BlockVector& v) {
    if (v.zero()) return 0.0;
    double top = 0.0;
    for (const auto& e : v.entries())
        for (const complex& c : e.block) top = std::max(top, std::abs(c));
    auto modular = [&](double rho) {
        double s = 0.0;
        std::vector<complex> scaled(v.block_size());
        for (const auto& e : v.entries()) {
            for (std::size_t j = 0; j < scaled.size(); ++j)
                scaled[j] = e.block[j] / rho;
            s += phi_theta_n(cp, scaled);
        }
        return s;
    };
    return detail::luxemburg(modular, top);
}

// Recursive twisted-sum quasinorm:
//   n = 1:  the phi_theta Luxemburg norm
//   n >= 2: ||x_{n-1} - Omega^{n-1}(prefix)||_{phi_theta} + (prefix value)
inline double rochberg_quasinorm(const InterpolationCouple& cp,
                                 const BlockVector& v) {
    const std::size_t n = v.block_size();
    if (v.zero()) return 0.0;
    if (n == 1) {
        std::vector<complex> x0(v.support_size());
        for (std::size_t i = 0; i < x0.size(); ++i)
            x0[i] = v.entries()[i].block[0];
        return cp.sequence_norm(x0);
    }
    const BlockVector pre = v.prefix();
    const std::vector<complex> om = omega_n(cp, unsigned(n - 1), pre);
    // x_{n-1} - Omega^{n-1}(prefix) over the union of the two supports.
    std::vector<complex> diff;
    diff.reserve(v.support_size() + pre.support_size());
    std::size_t i = 0, j = 0;
    const auto& ve = v.entries();
    const auto& pe = pre.entries();
    while (i < ve.size() || j < pe.size()) {
        if (j >= pe.size() || (i < ve.size() && ve[i].k < pe[j].k)) {
            diff.push_back(ve[i].block[0]);
            ++i;
        } else if (i >= ve.size() || pe[j].k < ve[i].k) {
            diff.push_back(-om[j]);
            ++j;
        } else {
            diff.push_back(ve[i].block[0] - om[j]);
            ++i;
            ++j;
        }
    }
    return cp.sequence_norm(diff) + rochberg_quasinorm(cp, pre);
}

// sup over s in [0, 2pi] of ||cos(s) x + sin(s) y|| for a real-vector norm
// functional: uniform angular grid plus golden-section polish around the
// grid argmax.
inline double complexification_norm(
    const std::function<double(std::span<const double>)>& norm_fn,
    std::span<const double> x, std::span<const double> y,
    unsigned grid_size = 720) {
    if (x.size() != y.size())
        throw std::invalid_argument("complexification_norm: length mismatch");
    if (grid_size < 4)
        throw std::invalid_argument("complexification_norm: grid too small");
    std::vector<double> buf(x.size());
    auto value = [&](double s) {
        const double c = std::cos(s), sn = std::sin(s);
        for (std::size_t i = 0; i < buf.size(); ++i)
            buf[i] = c * x[i] + sn * y[i];
        return norm_fn(buf);
    };
    const double two_pi = 2.0 * std::numbers::pi;
    double best = 0.0, best_s = 0.0;
    for (unsigned i = 0; i < grid_size; ++i) {
        const double s = two_pi * double(i) / double(grid_size);
        const double f = value(s);
        if (f > best) {
            best = f;
            best_s = s;
        }
    }
    // golden-section maximization on the bracketing grid cell pair
    const double h = two_pi / double(grid_size);
    double a = best_s - h, b = best_s + h;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = value(c), fd = value(d);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = value(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = value(d);
        }
    }
    return std::max({best, fc, fd});
}

// Entrywise real and imaginary parts of a block vector.
inline std::pair<BlockVector, BlockVector> real_imag_split(const BlockVector& v) {
    BlockVector re(v.block_size()), im(v.block_size());
    for (const auto& e : v.entries()) {
        std::vector<complex> br(e.block.size()), bi(e.block.size());
        for (std::size_t j = 0; j < e.block.size(); ++j) {
            br[j] = complex{e.block[j].real(), 0.0};
            bi[j] = complex{e.block[j].imag(), 0.0};
        }
        re.set(e.k, std::move(br));
        im.set(e.k, std::move(bi));
    }
    return {std::move(re), std::move(im)};
}

} // namespace twistlab
