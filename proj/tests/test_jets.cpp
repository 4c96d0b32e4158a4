// Jet arithmetic, the two-point power jet, the rotated conformal map, and
// the contour-integral coefficient oracle.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include <twistlab/cauchy.hpp>
#include <twistlab/conformal.hpp>
#include <twistlab/jet.hpp>

using namespace twistlab;

namespace {

Jet random_jet(std::mt19937_64& rng, double center, std::size_t order) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    Jet j(center, order);
    for (std::size_t i = 0; i <= order; ++i) j[i] = complex{u(rng), u(rng)};
    return j;
}

} // namespace

TEST_CASE("binomial square in jet arithmetic") {
    Jet one_plus_u(0.5, 2);
    one_plus_u[0] = 1.0;
    one_plus_u[1] = 1.0;
    const Jet sq = one_plus_u * one_plus_u;
    CHECK(sq[0] == complex{1.0, 0.0});
    CHECK(sq[1] == complex{2.0, 0.0});
    CHECK(sq[2] == complex{1.0, 0.0});
}

TEST_CASE("multiplication by the zero jet") {
    std::mt19937_64 rng(1);
    const Jet a = random_jet(rng, 0.3, 4);
    const Jet zero(0.3, 4);
    const Jet p = a * zero;
    for (std::size_t j = 0; j <= 4; ++j) CHECK(p[j] == complex{});
}

TEST_CASE("jet arithmetic requires matching center and order") {
    const Jet a(0.3, 4), b(0.4, 4), c(0.3, 5);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("jet ring laws on random jets") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Jet a = random_jet(rng, 0.25, 5);
        const Jet b = random_jet(rng, 0.25, 5);
        const Jet c = random_jet(rng, 0.25, 5);
        const Jet ab = a * b, ba = b * a;
        const Jet abc1 = (a * b) * c, abc2 = a * (b * c);
        for (std::size_t j = 0; j <= 5; ++j) {
            CHECK(std::abs(ab[j] - ba[j]) <= 1e-12);
            CHECK(std::abs(abc1[j] - abc2[j]) <= 1e-12);
        }
    }
}

TEST_CASE("jet division inverts multiplication") {
    std::mt19937_64 rng(3);
    Jet den = random_jet(rng, 0.5, 5);
    den[0] = complex{1.3, -0.4}; // nonzero constant term
    const Jet num = random_jet(rng, 0.5, 5);
    const Jet q = jet_div(num, den);
    const Jet back = q * den;
    for (std::size_t j = 0; j <= 5; ++j)
        CHECK(std::abs(back[j] - num[j]) <= 1e-12);
    const Jet zero_den(0.5, 5);
    CHECK_THROWS_AS(jet_div(num, zero_den), std::invalid_argument);
}

TEST_CASE("two-point power jet with equal endpoints is constant") {
    const Jet j = two_point_power_jet(1.0, 1.0, complex{1.0, 0.0}, 0.5, 4);
    CHECK(j[0] == complex{1.0, 0.0});
    for (std::size_t i = 1; i <= 4; ++i) CHECK(j[i] == complex{});
}

TEST_CASE("two-point power jet closed form for b = e^2") {
    const double e = std::exp(1.0);
    const Jet j = two_point_power_jet(1.0, e * e, complex{1.0, 0.0}, 0.5, 3);
    CHECK(std::abs(j[0] - complex{e, 0.0}) <= 1e-13 * e);
    CHECK(std::abs(j[1] - complex{2.0 * e, 0.0}) <= 1e-13 * e);
    CHECK(std::abs(j[2] - complex{2.0 * e, 0.0}) <= 1e-13 * e);
}

TEST_CASE("two-point power jet degenerate inputs") {
    const Jet z = two_point_power_jet(1.0, 2.0, complex{}, 0.5, 3);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(z[i] == complex{});
    CHECK_THROWS_AS(
        two_point_power_jet(-1.0, 2.0, complex{1.0, 0.0}, 0.5, 3),
        std::domain_error);
}

TEST_CASE("conformal map vanishes at the interpolation point") {
    for (double theta : {0.17, 0.5, 0.83}) {
        const ConformalMap phi(theta);
        CHECK(std::abs(phi(complex{theta, 0.0})) <= 1e-12);
    }
}

TEST_CASE("conformal map boundary values are unimodular") {
    const ConformalMap phi(0.37);
    for (int side = 0; side <= 1; ++side)
        for (int i = 0; i < 101; ++i) {
            const double t = -5.0 + 10.0 * double(i) / 100.0;
            CHECK(std::abs(std::abs(phi.boundary(side, t)) - 1.0) <= 1e-10);
        }
}

TEST_CASE("rotated conformal map is real on the interval") {
    const ConformalMap phi(0.37);
    for (int i = 1; i <= 99; ++i) {
        const double t = double(i) / 100.0;
        CHECK(std::abs(phi(complex{t, 0.0}).imag()) <= 1e-10);
    }
}

TEST_CASE("conformal derivative at theta = 1/2 is pi/2") {
    const ConformalMap phi(0.5);
    CHECK(phi.derivative_at_center() ==
          Catch::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
    const Jet j = phi.jet(4);
    CHECK(j[0] == complex{});
    CHECK(j[1].imag() == 0.0);
    CHECK(j[1].real() == Catch::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
}

TEST_CASE("conformal boundary value at the origin for theta = 1/2") {
    // chi_{1/2}(0) = (1-i)/(1+i) = -i; the rotation at 1/2 is -i, so the
    // rotated value is -1.
    const ConformalMap phi(0.5);
    CHECK(std::abs(phi.boundary(0, 0.0) - complex{-1.0, 0.0}) <= 1e-12);
}

TEST_CASE("conformal map rejects invalid arguments") {
    CHECK_THROWS_AS(ConformalMap(0.0), std::domain_error);
    CHECK_THROWS_AS(ConformalMap(1.0), std::domain_error);
    CHECK_THROWS_AS(ConformalMap(0.5).boundary(2, 0.0), std::invalid_argument);
}

TEST_CASE("contour oracle on a monomial") {
    const double theta = 0.4;
    auto f = [theta](complex z) { return (z - theta) * (z - theta); };
    CHECK(std::abs(cauchy_coefficient(f, theta, 2, 0.1) - complex{1.0, 0.0}) <=
          1e-12);
    CHECK(std::abs(cauchy_coefficient(f, theta, 1, 0.1)) <= 1e-12);
    CHECK(std::abs(cauchy_coefficient(f, theta, 0, 0.1)) <= 1e-12);
}

TEST_CASE("contour oracle on the exponential") {
    const double theta = 0.5;
    auto f = [](complex z) { return std::exp(z); };
    double factorial = 1.0;
    for (unsigned j = 0; j <= 6; ++j) {
        if (j > 0) factorial *= double(j);
        const complex want{std::exp(theta) / factorial, 0.0};
        CHECK(std::abs(cauchy_coefficient(f, theta, j, 0.2) - want) <= 1e-10);
    }
}

TEST_CASE("contour oracle matches the two-point power jet") {
    const double theta = 0.5, e2 = std::exp(2.0);
    const Jet jet = two_point_power_jet(1.0, e2, complex{1.0, 0.0}, theta, 6);
    auto f = [e2](complex z) { return std::pow(e2, z); };
    for (unsigned j = 0; j <= 6; ++j)
        CHECK(std::abs(cauchy_coefficient(f, theta, j, 0.2) - jet[j]) <= 1e-10);
}

TEST_CASE("contour oracle matches the conformal jet") {
    for (double theta : {0.3, 0.5, 0.7}) {
        const ConformalMap phi(theta);
        const Jet jet = phi.jet(6);
        auto f = [&phi](complex z) { return phi(z); };
        const double r = default_oracle_radius(theta);
        for (unsigned j = 0; j <= 6; ++j) {
            const complex oracle = cauchy_coefficient(f, theta, j, r);
            const double scale = std::max(1e-2, std::abs(jet[j]));
            CHECK(std::abs(oracle - jet[j]) / scale <= 1e-7);
        }
    }
}

TEST_CASE("contour oracle argument validation") {
    auto f = [](complex z) { return z; };
    CHECK_THROWS_AS(cauchy_coefficient(f, 0.2, 0, 0.3), std::domain_error);
    CHECK_THROWS_AS(cauchy_coefficient(f, 0.5, 0, 0.1, 32),
                    std::invalid_argument);
}

TEST_CASE("jet multiplication agrees with the oracle on products") {
    const double theta = 0.5, e2 = std::exp(2.0), e3 = std::exp(3.0);
    const Jet a = two_point_power_jet(1.0, e2, complex{1.0, 0.0}, theta, 6);
    const Jet b = two_point_power_jet(1.0, e3, complex{1.0, 0.0}, theta, 6);
    const Jet prod = a * b;
    auto f = [e2, e3](complex z) { return std::pow(e2, z) * std::pow(e3, z); };
    for (unsigned j = 0; j <= 6; ++j)
        CHECK(std::abs(cauchy_coefficient(f, theta, j, 0.2) - prod[j]) /
                  std::max(1.0, std::abs(prod[j])) <=
              1e-8);
}

TEST_CASE("jet evaluation uses the truncated polynomial") {
    Jet j(0.5, 2);
    j[0] = complex{1.0, 0.0};
    j[1] = complex{0.0, 1.0};
    j[2] = complex{2.0, 0.0};
    const complex z{0.7, 0.1};
    const complex u = z - 0.5;
    const complex want = complex{1.0, 0.0} + complex{0.0, 1.0} * u +
                         complex{2.0, 0.0} * u * u;
    CHECK(std::abs(j.eval(z) - want) <= 1e-15);
}
