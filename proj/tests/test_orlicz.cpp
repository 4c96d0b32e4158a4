// Scalar Orlicz functions: evaluation, inversion, Luxemburg norms, and the
// empirical Delta_2 / quasi-additivity / scaling estimators.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include <twistlab/orlicz.hpp>

using namespace twistlab;

TEST_CASE("power evaluation is the closed form") {
    const auto f = OrliczFunction::power(2.0);
    CHECK(f(3.0) == 9.0);
    CHECK(f(0.0) == 0.0);
    CHECK(f(1.5) == Catch::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("power_log evaluation is the closed form") {
    const auto f = OrliczFunction::power_log(2.0, 1.0);
    CHECK(f(1.0) == Catch::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(f(0.0) == 0.0);
}

TEST_CASE("negative arguments are rejected") {
    const auto f = OrliczFunction::power(2.0);
    CHECK_THROWS_AS(f(-1.0), std::domain_error);
    CHECK_THROWS_AS(f.inverse(-1.0), std::domain_error);
}

TEST_CASE("ess_sup kind has no forward evaluator") {
    const auto f = OrliczFunction::ess_sup();
    CHECK_THROWS_AS(f(1.0), std::logic_error);
    CHECK(f.inverse(0.5) == 1.0);
    CHECK(f.inverse(123.0) == 1.0);
}

TEST_CASE("factory argument validation") {
    CHECK_THROWS_AS(OrliczFunction::power(0.5), std::domain_error);
    CHECK_THROWS_AS(OrliczFunction::power_log(2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(OrliczFunction::power_log(0.0, 1.0), std::domain_error);
}

TEST_CASE("inverse of the power kind") {
    const auto f = OrliczFunction::power(2.0);
    CHECK(f.inverse(4.0) == Catch::Approx(2.0).epsilon(1e-14));
    CHECK(f.inverse(0.0) == 0.0);
}

TEST_CASE("inverse of power_log agrees with forward evaluation") {
    const auto f = OrliczFunction::power_log(2.0, 1.0);
    CHECK(f.inverse(std::log(2.0)) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inversion round-trip on a log grid") {
    for (const auto& f : {OrliczFunction::power(1.0), OrliczFunction::power(2.5),
                          OrliczFunction::power_log(2.0, 1.0),
                          OrliczFunction::power_log(1.0, 2.0)}) {
        for (double s : log_grid(1e-8, 1e8, 100)) {
            const double t = f.inverse(s);
            CHECK(std::abs(f(t) - s) / s <= 1e-9);
        }
    }
}

TEST_CASE("inverse is strictly increasing on the test grid") {
    const auto f = OrliczFunction::power_log(3.0, 1.5);
    double prev = 0.0;
    for (double s : log_grid(1e-8, 1e8, 100)) {
        const double t = f.inverse(s);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("Luxemburg norm closed forms") {
    const std::vector<complex> x34{complex{3.0, 0.0}, complex{4.0, 0.0}};
    CHECK(OrliczFunction::power(2.0).luxemburg_norm(x34) ==
          Catch::Approx(5.0).epsilon(1e-11));
    const std::vector<complex> ones(3, complex{1.0, 0.0});
    CHECK(OrliczFunction::power(1.0).luxemburg_norm(ones) ==
          Catch::Approx(3.0).epsilon(1e-11));
    const std::vector<complex> zero(4, complex{});
    CHECK(OrliczFunction::power(2.0).luxemburg_norm(zero) == 0.0);
}

TEST_CASE("Luxemburg norm of the ess_sup kind is the max modulus") {
    const std::vector<complex> x{complex{1.0, 0.0}, complex{0.0, -7.0},
                                 complex{3.0, 4.0}};
    CHECK(OrliczFunction::ess_sup().luxemburg_norm(x) == 7.0);
}

TEST_CASE("Luxemburg norm homogeneity and triangle inequality") {
    const auto f = OrliczFunction::power_log(2.0, 1.0);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<complex> x(5), y(5);
        for (auto& v : x) v = complex{u(rng), u(rng)};
        for (auto& v : y) v = complex{u(rng), u(rng)};
        const complex lambda{u(rng), u(rng)};
        std::vector<complex> lx = x, sum = x;
        for (auto& v : lx) v *= lambda;
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += y[i];
        const double nx = f.luxemburg_norm(x);
        const double ny = f.luxemburg_norm(y);
        CHECK(std::abs(f.luxemburg_norm(lx) - std::abs(lambda) * nx) <=
              1e-10 * std::max(1.0, std::abs(lambda) * nx));
        CHECK(f.luxemburg_norm(sum) <= nx + ny + 1e-10);
    }
}

TEST_CASE("Luxemburg normalization identity for Delta_2 kinds") {
    const auto f = OrliczFunction::power(2.0);
    const std::vector<complex> x{complex{0.3, 1.2}, complex{-2.0, 0.1},
                                 complex{0.0, 0.0}, complex{5.0, -1.0}};
    const double rho = f.luxemburg_norm(x);
    double modular = 0.0;
    for (const complex& v : x)
        if (v != complex{}) modular += f(std::abs(v) / rho);
    CHECK(modular == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("monotone_table evaluation and validation") {
    const auto f = OrliczFunction::monotone_table({{0.0, 0.0}, {1.0, 1.0},
                                                   {2.0, 4.0}});
    CHECK(f(0.5) == Catch::Approx(0.5));
    CHECK(f(1.5) == Catch::Approx(2.5));
    CHECK(f(3.0) == Catch::Approx(7.0)); // extended with the last slope
    CHECK_THROWS_AS(OrliczFunction::monotone_table({{-1.0, 0.0}, {1.0, 1.0}}),
                    std::domain_error);
    CHECK_THROWS_AS(OrliczFunction::monotone_table({{0.0, 1.0}, {1.0, 2.0}}),
                    std::domain_error);
    CHECK_THROWS_AS(OrliczFunction::monotone_table({{0.0, 0.0}, {1.0, 2.0},
                                                    {2.0, 1.0}}),
                    std::domain_error);
}

TEST_CASE("doubling constant matches 2^p for power kinds") {
    const auto grid = log_grid(1e-4, 1e4, 200);
    CHECK(estimate_delta2(OrliczFunction::power(2.0), grid).value ==
          Catch::Approx(4.0).epsilon(1e-12));
    CHECK(estimate_delta2(OrliczFunction::power(1.0), grid).value ==
          Catch::Approx(2.0).epsilon(1e-12));
    CHECK(estimate_delta2(OrliczFunction::power(3.0), grid).value ==
          Catch::Approx(8.0).epsilon(1e-12));
    CHECK_THROWS_AS(estimate_delta2(OrliczFunction::ess_sup(), grid),
                    std::logic_error);
}

TEST_CASE("quasi-additivity constant for power kinds") {
    CHECK(estimate_quasi_additivity(OrliczFunction::power(1.0), 2000, 0).value ==
          Catch::Approx(1.0).epsilon(1e-12));
    const double c2 =
        estimate_quasi_additivity(OrliczFunction::power(2.0), 20000, 0).value;
    CHECK(c2 <= 2.0 + 1e-12);
    CHECK(c2 >= 1.99);
    const double c3 =
        estimate_quasi_additivity(OrliczFunction::power(3.0), 20000, 0).value;
    CHECK(c3 <= 4.0 + 1e-12);
    CHECK(c3 >= 3.9);
}

TEST_CASE("scaling constant closed forms") {
    CHECK(estimate_scaling_constant(OrliczFunction::power(2.0), 3.0, 500, 0)
              .value == Catch::Approx(9.0).epsilon(1e-12));
    CHECK(estimate_scaling_constant(OrliczFunction::power(2.0), 1.0, 500, 0)
              .value == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(estimate_scaling_constant(OrliczFunction::power(1.0), 0.5, 500, 0)
              .value == Catch::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("estimator witnesses replay to 1e-12") {
    const auto f = OrliczFunction::power_log(2.0, 1.0);
    for (const auto& est :
         {estimate_quasi_additivity(f, 3000, 7),
          estimate_scaling_constant(f, 2.5, 3000, 7),
          estimate_delta2(f, log_grid(1e-4, 1e4, 200))}) {
        REQUIRE(est.replay);
        CHECK(std::abs(est.replay() - est.value) <= 1e-12 *
              std::max(1.0, std::abs(est.value)));
    }
}

TEST_CASE("Delta_2 profile constants are at least 1") {
    const auto prof = profile_delta2(OrliczFunction::power_log(2.0, 1.0));
    CHECK(prof.doubling >= 1.0 - 1e-12);
    CHECK(prof.quasi_additivity >= 1.0 - 1e-12);
    CHECK(prof.scaling(2.0) >= 1.0 - 1e-12);
}

TEST_CASE("estimators are reproducible for a fixed seed") {
    const auto f = OrliczFunction::power_log(2.0, 1.0);
    const auto a = estimate_quasi_additivity(f, 1000, 42);
    const auto b = estimate_quasi_additivity(f, 1000, 42);
    CHECK(a.value == b.value);
    const auto c = estimate_quasi_additivity(f, 1000, 43);
    CHECK(a.value != c.value);
}
