#include <doctest.h>

#include <cmath>
#include <random>

#include "sphgreen/poly.hpp"
#include "sphgreen/scalar_kernel.hpp"

using namespace sphgreen;

namespace {

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& ci : c) ci = Rational(num(rng), den(rng));
    return Poly::from_coeffs(std::move(c));
}

}  // namespace

TEST_SUITE("exact_poly") {

TEST_CASE("rational basics") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(1, 3).pow(-2) == Rational(9));
    Rational root;
    CHECK(sqrt_exact(Rational(9, 16), root));
    CHECK(root == Rational(3, 4));
    CHECK_FALSE(sqrt_exact(Rational(2), root));
}

TEST_CASE("poly derivative examples") {
    Poly x3 = Poly::monomial(3, Rational(1));
    CHECK(x3.derivative(2) == Poly::monomial(1, Rational(6)));

    Poly q = Poly::from_coeffs({Rational(1), Rational(0), Rational(-1)});  // 1-x^2
    Poly q2 = q * q;
    CHECK(q2.derivative() ==
          Poly::from_coeffs({Rational(0), Rational(-4), Rational(0), Rational(4)}));

    CHECK(Poly(Rational(1)).derivative().is_zero());
}

TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
    std::mt19937 rng(4457u);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(rng, 4), q = random_poly(rng, 4), r = random_poly(rng, 3);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
}

TEST_CASE("division") {
    Poly q = Poly::from_coeffs({Rational(1), Rational(0), Rational(-1)});
    Poly cube = q.pow(3);
    CHECK(cube.divexact(q) == q * q);
    CHECK_THROWS_AS(cube.divexact(Poly::x() + Poly(Rational(5))), std::domain_error);
    auto [quot, rem] = (Poly::x() * Poly::x()).divmod(Poly::x() + Poly(Rational(1)));
    CHECK(quot == Poly::x() - Poly(Rational(1)));
    CHECK(rem == Poly(Rational(1)));
}

TEST_CASE("degree cap guards runaway growth") {
    Poly base = Poly::x() + Poly(Rational(1));
    CHECK_THROWS_AS(base.pow(65), DegreeCapError);
    set_poly_degree_cap(80);
    CHECK(base.pow(65).degree() == 65);
    set_poly_degree_cap(64);
}

TEST_CASE("weighted moments") {
    CHECK(weighted_moment_exact(0, 0) == Rational(2));
    CHECK(weighted_moment_exact(2, 0) == Rational(2, 3));
    CHECK(weighted_moment_exact(2, 1) == Rational(4, 15));
    CHECK(weighted_moment_exact(5, 3) == Rational(0));
}

TEST_CASE("weighted moments against the Beta closed form") {
    // int x^m (1-x^2)^p dx = B((m+1)/2, p+1) for even m
    for (int m = 0; m <= 8; m += 2)
        for (int p = 0; p <= 6; ++p) {
            const double beta = std::exp(log_gamma(0.5 * (m + 1)) + log_gamma(p + 1.0) -
                                         log_gamma(0.5 * (m + 1) + p + 1.0));
            const double got = weighted_moment_exact(m, p).to_double();
            CHECK(std::fabs(got - beta) / beta < 1e-12);
        }
}

TEST_CASE("rational function canonical form") {
    Poly x = Poly::x();
    RationalFn f(x * x - Poly(Rational(1)), x + Poly(Rational(1)));
    CHECK(f.num() == x - Poly(Rational(1)));  // reduced
    CHECK(f.den() == Poly(Rational(1)));
    RationalFn g(Poly(Rational(2)), Poly::from_coeffs({Rational(2), Rational(4)}));
    CHECK(g.den().leading() == Rational(1));  // monic denominator
    CHECK((f - f).is_zero());
}

TEST_CASE("radial laplacian examples") {
    const Poly x = Poly::x();
    // F = r^2, n = 3: 6
    RationalFn r2 = RationalFn::from_poly(x * x);
    CHECK(radial_laplacian(r2, 3) == RationalFn::from_poly(Poly(Rational(6))));
    // F = r^4, n = 2: 16 r^2
    RationalFn r4 = RationalFn::from_poly((x * x) * (x * x));
    CHECK(radial_laplacian(r4, 2) == RationalFn::from_poly((x * x).scaled(Rational(16))));
    // F = 1/(1+r^2), n = 2: (4r^2-4)/(1+r^2)^3
    Poly opr2 = Poly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    RationalFn f(Poly(Rational(1)), opr2);
    RationalFn expected(Poly::from_coeffs({Rational(-4), Rational(0), Rational(4)}),
                        opr2.pow(3));
    CHECK(radial_laplacian(f, 2) == expected);
}

TEST_CASE("harmonicity of the fundamental-solution power") {
    const Poly x = Poly::x();
    for (int n = 3; n <= 6; ++n) {
        RationalFn f(Poly(Rational(1)), Poly::monomial(n - 2, Rational(1)));
        CHECK(radial_laplacian(f, n).is_zero());
    }
}

TEST_CASE("odd-order pole at the origin is rejected for regular inputs") {
    // F = r is not a smooth radial function; its Laplacian carries (n-1)/r.
    RationalFn f = RationalFn::from_poly(Poly::x());
    CHECK_THROWS_AS(radial_laplacian(f, 3), std::domain_error);
}

}  // TEST_SUITE
