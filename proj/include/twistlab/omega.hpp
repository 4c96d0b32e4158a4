// The analytic-family selectors B^n on finite vectors and the quasilinear
// maps Omega^n = (n-th Taylor coefficient of B^n at theta).
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <twistlab/block_vector.hpp>
#include <twistlab/couple.hpp>
#include <twistlab/g_recursion.hpp>
#include <twistlab/jet.hpp>

namespace twistlab {

namespace detail {

// Coordinate k of B^1(x): ||x|| times the two-point power jet at
// phi_theta(|x_k| / ||x||). The scaled value at theta collapses to x_k, so
// the coefficients are x_k ln(b_k/a_k)^j / j!.
inline Jet b1_jet_with_norm(const InterpolationCouple& cp,
                            std::span<const complex> x, std::size_t k,
                            double norm, std::size_t order) {
    Jet r(cp.theta(), order);
    if (norm == 0.0 || x[k] == complex{}) return r;
    const double lr = g_log_ratio(cp, std::abs(x[k]) / norm);
    complex term = x[k];
    for (std::size_t j = 0; j <= order; ++j) {
        r[j] = term;
        term *= lr / double(j + 1);
    }
    return r;
}

// Jets of B^m per support coordinate. rows[0] is the top component x_{m-1};
// rows.back() is x_0. All rows share one support alignment.
inline std::vector<Jet> b_jets(const InterpolationCouple& cp,
                               std::span<const std::vector<complex>> rows,
                               std::size_t order) {
    const std::size_t m = rows.size();
    const std::size_t width = rows[0].size();
    if (m == 1) {
        const double norm = cp.sequence_norm(rows[0]);
        std::vector<Jet> out;
        out.reserve(width);
        for (std::size_t i = 0; i < width; ++i)
            out.push_back(b1_jet_with_norm(cp, rows[0], i, norm, order));
        return out;
    }
    std::vector<Jet> prev = b_jets(cp, rows.subspan(1), order);
    // As in g_jet: the m! and (phi')^{m-1} factors of the correction cancel
    // against k_m, so work with the bare differences and a unit-lead phi
    // power; the ratios |y_i| / ||y|| that enter the log-ratio are unchanged
    // by the common factor m!. Compensated differences keep coefficient m-1
    // accurate when the previous level's coefficients are large.
    std::vector<complex> defect(width), comp(width);
    for (std::size_t i = 0; i < width; ++i)
        two_diff(rows[0][i], prev[i][m - 1], defect[i], comp[i]);
    const double dnorm = cp.sequence_norm(defect);
    const Jet corr = unit_lead_phi_pow(cp, m, order);
    for (std::size_t i = 0; i < width; ++i) {
        prev[i] = prev[i] + corr * b1_jet_with_norm(cp, defect, i, dnorm, order);
        prev[i][m - 1] += comp[i];
    }
    return prev;
}

inline std::vector<std::vector<complex>> component_rows(const BlockVector& v) {
    const std::size_t n = v.block_size();
    std::vector<std::vector<complex>> rows(
        n, std::vector<complex>(v.support_size()));
    for (std::size_t i = 0; i < v.support_size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[j][i] = v.entries()[i].block[j];
    return rows;
}

} // namespace detail

// Jet at theta of coordinate k of B^1(x), for a scalar sequence x given as a
// dense span. Coefficient 0 equals x[k]; B^1(0) = 0 by homogeneity.
inline Jet b1_jet(const InterpolationCouple& cp, std::span<const complex> x,
                  std::size_t k, std::size_t order) {
    if (k >= x.size()) throw std::invalid_argument("b1_jet: coordinate out of range");
    return detail::b1_jet_with_norm(cp, x, k, cp.sequence_norm(x), order);
}

// Omega^n(v): the n-th Taylor coefficient at theta of B^n(v), per support
// coordinate. The result is aligned with v.entries(); coordinates outside
// the support map to zero. Homogeneous under complex scalars.
inline std::vector<complex> omega_n(const InterpolationCouple& cp, unsigned n,
                                    const BlockVector& v) {
    if (n < 1) throw std::invalid_argument("omega_n: need n >= 1");
    if (v.block_size() != n)
        throw std::invalid_argument("omega_n: block size must equal n");
    if (v.zero()) return {};
    const std::size_t order = n + 2;
    const auto rows = detail::component_rows(v);
    const auto jets = detail::b_jets(cp, rows, order);
    std::vector<complex> out(jets.size());
    for (std::size_t i = 0; i < jets.size(); ++i) out[i] = jets[i][n];
    return out;
}

// The coefficient map Psi from the set-equality argument: coordinate k maps
// to the (n-1)-th Taylor coefficient of g at the k-th block of the prefix.
// `prefix` has n-1 blocks; the result is aligned with prefix.entries().
inline std::vector<complex> psi_map(const InterpolationCouple& cp, unsigned n,
                                    const BlockVector& prefix) {
    if (n < 2) throw std::invalid_argument("psi_map: need n >= 2");
    if (prefix.block_size() != n - 1)
        throw std::invalid_argument("psi_map: prefix must have n-1 blocks");
    std::vector<complex> out(prefix.support_size());
    for (std::size_t i = 0; i < prefix.support_size(); ++i) {
        const Jet g = g_jet(cp, prefix.entries()[i].block, n);
        out[i] = g[n - 1];
    }
    return out;
}

} // namespace twistlab
