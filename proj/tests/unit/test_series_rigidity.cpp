#include <doctest.h>

#include "sphgreen/series_rigidity.hpp"

using namespace sphgreen;

TEST_SUITE("series_rigidity") {

TEST_CASE("recursion reproduces the sphere Taylor coefficients for c0 = 1/4") {
    auto sol = series_rigidity_solve(Rational(1, 4), 4);
    REQUIRE(sol.rational());
    auto a = sol.as_rationals();
    REQUIRE(a.size() == 4);
    CHECK(a[0] == Rational(1, 2));
    CHECK(a[1] == Rational(1, 8));
    CHECK(a[2] == Rational(1, 16));
    CHECK(a[3] == Rational(5, 128));
}

TEST_CASE("c0 = 1 expands (1 - sqrt(1-4t))/2 = t + t^2 + 2t^3 + 5t^4 + ...") {
    auto sol = series_rigidity_solve(Rational(1), 4);
    auto a = sol.as_rationals();
    CHECK(a[0] == Rational(1));
    CHECK(a[1] == Rational(1));
    CHECK(a[2] == Rational(2));
    CHECK(a[3] == Rational(5));
}

TEST_CASE("recursion equals the binomial-series oracle exactly") {
    for (const Rational& c0 : {Rational(1, 4), Rational(1), Rational(2), Rational(3, 7)}) {
        const int N = 8;
        auto sol = series_rigidity_solve(c0, N);
        auto oracle = sphere_series_oracle(c0, N);
        REQUIRE(sol.coeffs.size() == oracle.size());
        for (int m = 0; m < N; ++m) {
            CHECK(sol.coeffs[static_cast<size_t>(m)].p == oracle[static_cast<size_t>(m)].p);
            CHECK(sol.coeffs[static_cast<size_t>(m)].q == oracle[static_cast<size_t>(m)].q);
        }
    }
}

TEST_CASE("non-square c0 stays in the quadratic extension") {
    auto sol = series_rigidity_solve(Rational(2), 3);
    CHECK_FALSE(sol.rational());
    CHECK_THROWS_AS(sol.as_rationals(), std::domain_error);
    // a_1 = sqrt(2), pure q-component
    CHECK(sol.coeffs[0].p == Rational(0));
    CHECK(sol.coeffs[0].q == Rational(1));
}

TEST_CASE("back-substitution residual vanishes exactly through degree N-1") {
    for (const Rational& c0 : {Rational(1, 4), Rational(2)}) {
        auto sol = series_rigidity_solve(c0, 12);
        for (const auto& r : series_rigidity_residual(sol)) {
            CHECK(r.p == Rational(0));
            CHECK(r.q == Rational(0));
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(series_rigidity_solve(Rational(0), 4), std::invalid_argument);
    CHECK_THROWS_AS(series_rigidity_solve(Rational(-1, 4), 4), std::invalid_argument);
}

}  // TEST_SUITE
