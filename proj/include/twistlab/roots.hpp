// Bracketed root-finding utilities shared by the norm and inversion routines.
#pragma once

#include <cmath>
#include <string>

#include <twistlab/common.hpp>

namespace twistlab::detail {

// Illinois (modified regula falsi) on a bracket [lo, hi] with F(lo) and
// F(hi) of opposite sign (ties allowed). Keeps the bracket like bisection
// but converges superlinearly on smooth monotone functions. Stops when the
// bracket is narrower than rel_tol * hi.
template <class F>
double illinois(F&& func, double lo, double hi, double flo, double fhi,
                double rel_tol, int max_iter) {
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    int side = 0; // -1: lo retained last, +1: hi retained last
    for (int i = 0; i < max_iter && (hi - lo) > rel_tol * hi; ++i) {
        double x;
        const double denom = flo - fhi;
        if (denom == 0.0) {
            x = 0.5 * (lo + hi);
        } else {
            x = lo + (hi - lo) * (flo / denom);
            // keep strictly inside the bracket; otherwise bisect
            if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
        }
        const double fx = func(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (flo < 0.0)) {
            lo = x;
            flo = fx;
            if (side == -1) fhi *= 0.5;
            side = -1;
        } else {
            hi = x;
            fhi = fx;
            if (side == 1) flo *= 0.5;
            side = 1;
        }
    }
    return 0.5 * (lo + hi);
}

// Solves f(t) = s for a continuous nondecreasing f with f(0) = 0, s > 0.
// The bracket is grown/shrunk by doubling from t = 1, then closed by the
// Illinois method to the given relative width.
template <class F>
double invert_increasing(F&& f, double s, double rel_tol = 1e-15,
                         int max_iter = 200) {
    double lo = 1.0, hi = 1.0;
    double flo = f(lo), fhi = flo;
    int guard = 0;
    if (flo < s) {
        while (fhi < s) {
            lo = hi;
            flo = fhi;
            hi *= 2.0;
            fhi = f(hi);
            if (++guard > 2100)
                throw NumericError("invert_increasing: no upper bracket, s=" +
                                   std::to_string(s));
        }
    } else {
        while (lo > 0.0 && flo > s) {
            hi = lo;
            fhi = flo;
            lo /= 2.0;
            flo = f(lo);
            if (++guard > 2100)
                throw NumericError("invert_increasing: no lower bracket, s=" +
                                   std::to_string(s));
        }
    }
    return illinois([&](double t) { return f(t) - s; }, lo, hi, flo - s,
                    fhi - s, rel_tol, max_iter);
}

// Luxemburg functional: inf{rho > 0 : S(rho) <= 1} for a continuous modular
// S with S -> 0 as rho -> inf and S -> inf as rho -> 0. `rho0` is the
// initial bracket guess (typically the max entry modulus).
template <class Modular>
double luxemburg(Modular&& S, double rho0, double rel_tol = 1e-12) {
    double lo, hi, slo, shi;
    int guard = 0;
    const double s0 = S(rho0);
    if (s0 > 1.0) {
        lo = rho0;
        slo = s0;
        hi = rho0 * 2.0;
        while ((shi = S(hi)) > 1.0) {
            lo = hi;
            slo = shi;
            hi *= 2.0;
            if (++guard > 2100)
                throw NumericError(
                    "luxemburg: modular never drops below 1, bracket lo=" +
                    std::to_string(lo));
        }
    } else {
        hi = rho0;
        shi = s0;
        lo = rho0 / 2.0;
        while ((slo = S(lo)) <= 1.0) {
            hi = lo;
            shi = slo;
            lo /= 2.0;
            if (lo < 1e-300 || ++guard > 2100)
                throw NumericError(
                    "luxemburg: modular never exceeds 1, bracket hi=" +
                    std::to_string(hi));
        }
    }
    return illinois([&](double rho) { return S(rho) - 1.0; }, lo, hi,
                    slo - 1.0, shi - 1.0, rel_tol, 200);
}

} // namespace twistlab::detail
