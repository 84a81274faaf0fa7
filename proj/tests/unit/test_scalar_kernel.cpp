#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "sphgreen/scalar_kernel.hpp"

using namespace sphgreen;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_SUITE("scalar_kernel") {

TEST_CASE("gamma at reference points") {
    CHECK(rel_err(gamma_real(0.5), std::sqrt(kPi)) < 1e-14);
    CHECK(rel_err(gamma_real(-0.5), -2.0 * std::sqrt(kPi)) < 1e-13);
    CHECK(rel_err(gamma_real(5.0), 24.0) < 1e-14);
    CHECK(rel_err(gamma_real(1.0), 1.0) < 1e-15);
}

TEST_CASE("gamma pole reporting") {
    CHECK_THROWS_AS(gamma_real(0.0), PoleError);
    CHECK_THROWS_AS(gamma_real(-3.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}

TEST_CASE("log_gamma reference values") {
    CHECK(std::fabs(log_gamma(1.0)) < 1e-14);
    CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
    CHECK(rel_err(log_gamma(10.0), std::log(362880.0)) < 1e-14);
    CHECK(rel_err(log_gamma(20.0), std::log(121645100408832000.0)) < 1e-14);
}

TEST_CASE("log_gamma large-argument accuracy against direct summation") {
    // ln Gamma(N) = sum_{k=1}^{N-1} ln k, compensated.
    const long N = 1000000;
    double sum = 0.0, comp = 0.0;
    for (long k = 1; k < N; ++k) {
        double term = std::log(static_cast<double>(k)) - comp;
        double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    CHECK(rel_err(log_gamma(static_cast<double>(N)), sum) < 1e-13);
}

TEST_CASE("recurrence property Gamma(z+1) = z Gamma(z)") {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    int tested = 0;
    while (tested < 200) {
        const double z = dist(rng);
        if (std::fabs(z) < 0.05) continue;
        if (z < 0.5 && std::fabs(z - std::round(z)) < 0.05) continue;
        const double lhs = gamma_real(z + 1.0);
        const double rhs = z * gamma_real(z);
        CHECK(rel_err(lhs, rhs) < 1e-12);
        ++tested;
    }
}

TEST_CASE("reflection property Gamma(z) Gamma(1-z) sin(pi z) = pi") {
    std::mt19937 rng(918273u);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    int tested = 0;
    while (tested < 200) {
        const double z = dist(rng);
        if (std::fabs(z - std::round(z)) < 0.05) continue;
        const double v = gamma_real(z) * gamma_real(1.0 - z) * std::sin(kPi * z) / kPi;
        CHECK(rel_err(v, 1.0) < 1e-11);
        ++tested;
    }
}

TEST_CASE("signed log gamma") {
    auto [s1, l1] = log_gamma_signed(-0.5);
    CHECK(s1 == -1);
    CHECK(rel_err(std::exp(l1), 2.0 * std::sqrt(kPi)) < 1e-13);
    auto [s2, l2] = log_gamma_signed(-1.5);
    CHECK(s2 == 1);
    CHECK(rel_err(s2 * std::exp(l2), 4.0 * std::sqrt(kPi) / 3.0) < 1e-13);
}

TEST_CASE("gamma ratios route through logs for large arguments") {
    CHECK(rel_err(gamma_ratio(8.0, 5.0), 5.0 * 6.0 * 7.0) < 1e-13);
    // Gamma(45)/Gamma(40) = 40*41*42*43*44
    CHECK(rel_err(gamma_ratio(45.0, 40.0), 40.0 * 41.0 * 42.0 * 43.0 * 44.0) < 1e-12);
    CHECK(rel_err(gamma_ratio(3.5, -0.5), gamma_real(3.5) / gamma_real(-0.5)) < 1e-12);
}

TEST_CASE("sphere volumes") {
    CHECK(rel_err(sphere_volume(2), 4.0 * kPi) < 1e-13);
    CHECK(rel_err(sphere_volume(3), 2.0 * kPi * kPi) < 1e-13);
    CHECK(rel_err(sphere_volume(4), 8.0 * kPi * kPi / 3.0) < 1e-13);
    CHECK(rel_err(sphere_volume(1), 2.0 * kPi) < 1e-13);
}

TEST_CASE("even-dimension volume identity") {
    // |S^n| (n-1)! = 2^n pi^{n/2} Gamma(n/2)
    for (int n = 2; n <= 12; n += 2) {
        double fact = 1.0;
        for (int j = 2; j < n; ++j) fact *= j;
        const double lhs = sphere_volume(n) * fact;
        const double rhs = std::pow(2.0, n) * std::pow(kPi, 0.5 * n) * gamma_real(0.5 * n);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

}  // TEST_SUITE
