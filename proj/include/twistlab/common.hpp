// Shared scalar types, error types and numeric helpers.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistlab {

using complex = std::complex<double>;

// Thrown when an iterative scheme fails to converge; carries diagnostics.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// sgn(z) = z/|z| for z != 0, sgn(0) = 0.
inline complex sgn(complex z) {
    const double m = std::abs(z);
    return m == 0.0 ? complex{0.0, 0.0} : z / m;
}

namespace detail {

// splitmix64 finalizer; used to derive independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    return mix64(mix64(a) ^ (b + 0x9e3779b97f4a7c15ULL));
}

// Compensated difference: d = fl(a - b), e = (a - b) - d exactly (TwoSum).
inline void two_diff(double a, double b, double& d, double& e) {
    d = a - b;
    const double z = d - a;
    e = (a - (d - z)) - (b + z);
}

inline void two_diff(complex a, complex b, complex& d, complex& e) {
    double dr, er, di, ei;
    two_diff(a.real(), b.real(), dr, er);
    two_diff(a.imag(), b.imag(), di, ei);
    d = {dr, di};
    e = {er, ei};
}

} // namespace detail

} // namespace twistlab
