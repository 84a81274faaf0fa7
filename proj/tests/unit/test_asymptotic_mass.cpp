#include <doctest.h>

#include <cmath>

#include "sphgreen/asymptotic_mass.hpp"

using namespace sphgreen;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

VectorXd dir3(double a, double b, double c) {
    VectorXd v(3);
    v << a, b, c;
    return v.normalized();
}

}  // namespace

TEST_SUITE("asymptotic_mass") {

TEST_CASE("sphere quadrature integrates the constant to the sphere area") {
    for (int n : {3, 4, 5}) {
        auto rule = sphere_quadrature(n, 12);
        double sum = 0.0;
        for (double w : rule.weights) sum += w;
        double area = (n == 3)   ? 4.0 * M_PI
                      : (n == 4) ? 2.0 * M_PI * M_PI
                                 : 8.0 * M_PI * M_PI / 3.0;  // |S^{n-1}|
        CHECK(sum == doctest::Approx(area).epsilon(1e-12));
        // odd polynomials integrate to zero
        double odd = 0.0;
        for (size_t i = 0; i < rule.dirs.size(); ++i) odd += rule.weights[i] * rule.dirs[i][0];
        CHECK(std::fabs(odd) < 1e-12);
        // |S^{n-1}|-normalized second moment: int w_0^2 = area / n
        double second = 0.0;
        for (size_t i = 0; i < rule.dirs.size(); ++i)
            second += rule.weights[i] * rule.dirs[i][0] * rule.dirs[i][0];
        CHECK(second == doctest::Approx(area / n).epsilon(1e-11));
    }
}

TEST_CASE("flat plane pulls back to the identity metric") {
    auto flat = GraphSurface::flat(3);
    for (double r : {5.0, 20.0}) {
        const MatrixXd gh = inverted_metric(flat, r * dir3(1.0, 2.0, -0.5));
        CHECK((gh - MatrixXd::Identity(3, 3)).lpNorm<Eigen::Infinity>() < 1e-14);
    }
    CHECK(mass_estimate(flat, 30.0, 8) == 0.0);
}

TEST_CASE("pullback metric is symmetric positive definite and near-flat") {
    auto s = GraphSurface::sphere(3, 1.0);
    for (double r : {20.0, 40.0}) {
        const VectorXd y = r * dir3(0.3, -0.7, 0.2);
        const MatrixXd gh = inverted_metric(s, y);
        CHECK((gh - gh.transpose()).lpNorm<Eigen::Infinity>() < 1e-14);
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(gh);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
        CHECK((gh - MatrixXd::Identity(3, 3)).lpNorm<Eigen::Infinity>() < 10.0 / (r * r));
    }
}

TEST_CASE("second-order expansion of the pullback against the closed form") {
    // r^2 (g_rr - tr g + (n-1)) -> (n-1) H^2 / (2 n^2) with H = n on the unit sphere
    for (int n : {3, 4}) {
        auto s = GraphSurface::sphere(n, 1.0);
        const double r = 100.0;
        VectorXd y = VectorXd::Zero(n);
        y[0] = 0.6;
        y[n - 1] = 0.8;
        y *= r;
        const MatrixXd gh = inverted_metric(s, y);
        const VectorXd w = y.normalized();
        const double combo = w.dot(gh * w) - gh.trace() + (n - 1.0);
        const double want = (n - 1.0) / 2.0;
        CHECK(std::fabs(r * r * combo - want) < 0.05 * want);
    }
}

TEST_CASE("mass is invariant under rotating the quadrature frame") {
    auto s = GraphSurface::sphere(3, 1.0);
    MatrixXd rot(3, 3);
    const double th = 0.7;
    rot << std::cos(th), -std::sin(th), 0, std::sin(th), std::cos(th), 0, 0, 0, 1;
    const double m1 = mass_estimate(s, 25.0, 16);
    const double m2 = mass_estimate(s, 25.0, 16, nullptr, &rot);
    CHECK(std::fabs(m1 - m2) < 1e-10);
}

TEST_CASE("order doubling self-consistency") {
    auto s = GraphSurface::sphere(3, 1.0);
    double delta = 0.0;
    const double m = mass_estimate(s, 25.0, 16, &delta);
    CHECK(std::fabs(delta) < 0.05 * std::max(std::fabs(m), 1e-8));
}

TEST_CASE("unit-sphere mass decays like r^{n-6} (quick n = 3 check)") {
    auto s = GraphSurface::sphere(3, 1.0);
    auto fit = decay_fit(s, {16.0, 32.0, 64.0}, 12);
    CHECK_FALSE(fit.exact_zero);
    CHECK(fit.monotone);
    CHECK(std::fabs(fit.exponent - (-3.0)) < 0.5);
    CHECK(std::fabs(fit.extrapolated_mass) < 1e-3);
}

TEST_CASE("flat plane reports the exact-zero branch") {
    auto flat = GraphSurface::flat(3);
    auto fit = decay_fit(flat, {10.0, 20.0, 40.0}, 8);
    CHECK(fit.exact_zero);
    CHECK(fit.extrapolated_mass == 0.0);
}

TEST_CASE("chart guard for small radii") {
    auto s = GraphSurface::sphere(3, 1.0);  // chart radius 0.9
    CHECK_THROWS_AS(mass_estimate(s, 1.0, 8), ChartError);
}

}  // TEST_SUITE
