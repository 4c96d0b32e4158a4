// Scalar Orlicz/Young functions: evaluation, numerical inversion, Luxemburg
// norms of finite complex sequences, and empirical doubling/quasi-additivity
// constants.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <twistlab/common.hpp>
#include <twistlab/estimate.hpp>
#include <twistlab/roots.hpp>

namespace twistlab {

enum class OrliczKind { power, power_log, ess_sup, monotone_table };

// A scalar Young function. Built-in kinds:
//   power(p):          t^p, p >= 1
//   power_log(p, a):   t^p * log(1+t)^a, p >= 1, a > 0
//   ess_sup:           the degenerate l_inf/c_0 side; no forward evaluator,
//                      inverse identically 1, sequence norm = max modulus
//   monotone_table:    monotone piecewise-linear interpolation of user data;
//                      convexity is not verified
class OrliczFunction {
public:
    static OrliczFunction power(double p) {
        if (p < 1.0) throw std::domain_error("power: need p >= 1");
        OrliczFunction f;
        f.kind_ = OrliczKind::power;
        f.p_ = p;
        f.nondegenerate_ = true;
        f.delta2_ = true;
        return f;
    }

    static OrliczFunction power_log(double p, double alpha) {
        if (p < 1.0 || alpha <= 0.0)
            throw std::domain_error("power_log: need p >= 1, alpha > 0");
        OrliczFunction f;
        f.kind_ = OrliczKind::power_log;
        f.p_ = p;
        f.alpha_ = alpha;
        f.nondegenerate_ = true;
        f.delta2_ = true;
        return f;
    }

    static OrliczFunction ess_sup() {
        OrliczFunction f;
        f.kind_ = OrliczKind::ess_sup;
        f.nondegenerate_ = false;
        f.delta2_ = false;
        return f;
    }

    static OrliczFunction monotone_table(
        std::vector<std::pair<double, double>> points) {
        if (points.empty())
            throw std::invalid_argument("monotone_table: empty grid");
        std::sort(points.begin(), points.end());
        if (points.front().first < 0.0)
            throw std::domain_error("monotone_table: negative abscissa");
        for (std::size_t i = 1; i < points.size(); ++i)
            if (points[i].second < points[i - 1].second)
                throw std::domain_error("monotone_table: values not monotone");
        if (points.front().first > 0.0) points.insert(points.begin(), {0.0, 0.0});
        if (points.front().second != 0.0)
            throw std::domain_error("monotone_table: phi(0) != 0");
        OrliczFunction f;
        f.kind_ = OrliczKind::monotone_table;
        f.table_ = std::move(points);
        // Nondegenerate iff strictly increasing with positive values off 0.
        f.nondegenerate_ = true;
        for (std::size_t i = 1; i < f.table_.size(); ++i)
            if (f.table_[i].second <= f.table_[i - 1].second)
                f.nondegenerate_ = false;
        f.delta2_ = false; // unverified for user tables
        return f;
    }

    OrliczKind kind() const { return kind_; }
    bool nondegenerate() const { return nondegenerate_; }
    bool delta2() const { return delta2_; }
    double exponent() const { return p_; }
    double log_exponent() const { return alpha_; }

    // phi(t). Not available for the ess_sup kind.
    double operator()(double t) const {
        if (t < 0.0) throw std::domain_error("OrliczFunction: negative argument");
        switch (kind_) {
            case OrliczKind::power:
                return std::pow(t, p_);
            case OrliczKind::power_log:
                return std::pow(t, p_) * std::pow(std::log1p(t), alpha_);
            case OrliczKind::monotone_table:
                return table_eval(t);
            case OrliczKind::ess_sup:
                throw std::logic_error(
                    "OrliczFunction: ess_sup has no forward evaluator");
        }
        return 0.0;
    }

    // The inverse of phi on [0, inf). For the ess_sup kind this is the
    // convention phi0^{-1} == 1; the power kind inverts in closed form;
    // other nondegenerate kinds use bracketed root-finding.
    double inverse(double s) const {
        if (s < 0.0) throw std::domain_error("inverse: negative argument");
        if (kind_ == OrliczKind::ess_sup) return 1.0;
        if (!nondegenerate_)
            throw std::logic_error("inverse: degenerate non-ess_sup function");
        if (s == 0.0) return 0.0;
        if (kind_ == OrliczKind::power) return std::pow(s, 1.0 / p_);
        return detail::invert_increasing([this](double t) { return (*this)(t); },
                                         s);
    }

    // Luxemburg norm inf{rho > 0 : sum phi(|x_k|/rho) <= 1} of a finitely
    // supported sequence; max modulus for the ess_sup kind.
    double luxemburg_norm(std::span<const complex> x) const {
        double top = 0.0;
        for (const complex& v : x) top = std::max(top, std::abs(v));
        if (top == 0.0) return 0.0;
        if (kind_ == OrliczKind::ess_sup) return top;
        auto modular = [&](double rho) {
            double s = 0.0;
            for (const complex& v : x) {
                const double m = std::abs(v);
                if (m > 0.0) s += (*this)(m / rho);
            }
            return s;
        };
        return detail::luxemburg(modular, top);
    }

private:
    double table_eval(double t) const {
        const auto& tb = table_;
        if (t >= tb.back().first) {
            // extend with the last segment's slope
            const auto& [t1, v1] = tb.back();
            if (tb.size() < 2) return v1;
            const auto& [t0, v0] = tb[tb.size() - 2];
            const double slope = t1 > t0 ? (v1 - v0) / (t1 - t0) : 0.0;
            return v1 + slope * (t - t1);
        }
        auto it = std::upper_bound(
            tb.begin(), tb.end(), t,
            [](double a, const std::pair<double, double>& b) { return a < b.first; });
        const auto& [t1, v1] = *it;
        const auto& [t0, v0] = *(it - 1);
        const double w = t1 > t0 ? (t - t0) / (t1 - t0) : 0.0;
        return v0 + w * (v1 - v0);
    }

    OrliczKind kind_ = OrliczKind::power;
    double p_ = 1.0;
    double alpha_ = 0.0;
    bool nondegenerate_ = false;
    bool delta2_ = false;
    std::vector<std::pair<double, double>> table_;
};

// A default log-spaced grid for scalar constant estimation.
inline std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    std::vector<double> g(count);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = std::exp(llo + (lhi - llo) * double(i) / double(count - 1));
    return g;
}

// sup over the grid of phi(2t)/phi(t), with the attaining t as witness.
inline ConstantEstimate estimate_delta2(const OrliczFunction& f,
                                        std::span<const double> t_grid) {
    if (!f.nondegenerate())
        throw std::logic_error("estimate_delta2: degenerate function");
    ConstantEstimate est;
    est.name = "delta2_doubling";
    double best_t = 0.0;
    for (double t : t_grid) {
        const double denom = f(t);
        if (t > 0.0 && denom == 0.0)
            throw std::domain_error("estimate_delta2: phi(t) = 0 at t > 0");
        if (denom == 0.0) continue;
        const double r = f(2.0 * t) / denom;
        if (r > est.value) {
            est.value = r;
            best_t = t;
        }
        ++est.trials;
    }
    est.witness["t"] = {complex{best_t, 0.0}};
    est.replay = [f, best_t] { return f(2.0 * best_t) / f(best_t); };
    return est;
}

// Empirical sup of phi(x+y)/(phi(x)+phi(y)) over seeded random positive
// pairs with log-uniform magnitudes in [1e-4, 1e4] (Lemma-style
// quasi-additivity constant c).
inline ConstantEstimate estimate_quasi_additivity(const OrliczFunction& f,
                                                  long sample_count,
                                                  std::uint64_t seed) {
    if (!f.nondegenerate())
        throw std::logic_error("estimate_quasi_additivity: degenerate function");
    ConstantEstimate est;
    est.name = "quasi_additivity";
    est.trials = sample_count;
    double bx = 1.0, by = 1.0;
    const double llo = std::log(1e-4), lhi = std::log(1e4);
    for (long i = 0; i < sample_count; ++i) {
        std::mt19937_64 rng(detail::mix64(seed, std::uint64_t(i)));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double x = std::exp(llo + (lhi - llo) * u(rng));
        const double y = std::exp(llo + (lhi - llo) * u(rng));
        const double r = f(x + y) / (f(x) + f(y));
        if (r > est.value) {
            est.value = r;
            bx = x;
            by = y;
        }
    }
    est.witness["x"] = {complex{bx, 0.0}};
    est.witness["y"] = {complex{by, 0.0}};
    est.replay = [f, bx, by] { return f(bx + by) / (f(bx) + f(by)); };
    return est;
}

// Empirical sup of phi(a*x)/phi(x) over seeded random x > 0 (the scale
// constant D_a).
inline ConstantEstimate estimate_scaling_constant(const OrliczFunction& f,
                                                  double a, long sample_count,
                                                  std::uint64_t seed) {
    if (!f.nondegenerate())
        throw std::logic_error("estimate_scaling_constant: degenerate function");
    if (a <= 0.0) throw std::domain_error("estimate_scaling_constant: a <= 0");
    ConstantEstimate est;
    est.name = "scaling_D_a";
    est.trials = sample_count;
    double bx = 1.0;
    const double llo = std::log(1e-4), lhi = std::log(1e4);
    for (long i = 0; i < sample_count; ++i) {
        std::mt19937_64 rng(detail::mix64(seed, std::uint64_t(i)));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const double x = std::exp(llo + (lhi - llo) * u(rng));
        const double r = f(a * x) / f(x);
        if (r > est.value) {
            est.value = r;
            bx = x;
        }
    }
    est.witness["x"] = {complex{bx, 0.0}};
    est.witness["a"] = {complex{a, 0.0}};
    est.replay = [f, a, bx] { return f(a * bx) / f(bx); };
    return est;
}

// Bundled doubling/quasi-additivity/scaling constants of one function.
struct Delta2Profile {
    OrliczFunction phi;
    double doubling = 1.0;         // M in phi(2t) <= M phi(t)
    double quasi_additivity = 1.0; // c in phi(x+y) <= c(phi(x)+phi(y))
    long samples = 0;
    std::uint64_t seed = 0;

    double scaling(double a) const {
        return estimate_scaling_constant(phi, a, samples, seed).value;
    }
};

inline Delta2Profile profile_delta2(const OrliczFunction& f,
                                    long samples = 20000,
                                    std::uint64_t seed = 0) {
    const auto grid = log_grid(1e-4, 1e4, 200);
    Delta2Profile prof{f, 1.0, 1.0, samples, seed};
    prof.doubling = estimate_delta2(f, grid).value;
    prof.quasi_additivity = estimate_quasi_additivity(f, samples, seed).value;
    return prof;
}

} // namespace twistlab
