#include "sphgreen/axial_operator.hpp"

#include <cmath>

namespace sphgreen {

namespace {

void check_even(int n, const char* who) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": n must be even and >= 2, got " +
                                    std::to_string(n));
}

Poly one_minus_x2() { return Poly::from_coeffs({Rational(1), Rational(0), Rational(-1)}); }

}  // namespace

Poly axial_Q(const Poly& u, int n) {
    check_even(n, "axial_Q");
    Poly v = one_minus_x2().pow(static_cast<unsigned>(n / 2)) * u.derivative();
    return v.derivative(n - 1);
}

Poly axial_Pn(const Poly& u, int n) {
    Poly q = axial_Q(u, n);
    return (n / 2) % 2 == 0 ? q : -q;
}

Poly u_k_family(int n, int k) {
    check_even(n, "u_k_family");
    if (k < 0) throw std::invalid_argument("u_k_family: k must be >= 0");
    const int m = (n - 2) / 2;
    Poly inner = one_minus_x2().pow(static_cast<unsigned>(k + m)).derivative(k);
    return inner.divexact(one_minus_x2().pow(static_cast<unsigned>(m)));
}

Rational verify_orthogonality(int n, int k, int l) {
    check_even(n, "verify_orthogonality");
    if (k == l) throw std::invalid_argument("verify_orthogonality: k and l must differ");
    Poly q = axial_Q(u_k_family(n, k), n) * u_k_family(n, l);
    return integrate_weighted(q, (n - 2) / 2);
}

AxialEigenCheck verify_eigenvalue(int n, int k) {
    check_even(n, "verify_eigenvalue");
    if (k < 1) throw std::invalid_argument("verify_eigenvalue: k must be >= 1");
    const int p = (n - 2) / 2;
    Poly uk = u_k_family(n, k);
    Rational num = integrate_weighted(axial_Q(uk, n) * uk, p);
    Rational den = integrate_weighted(uk * uk, p);
    AxialEigenCheck c;
    c.computed = num / den;
    // (k+n-1)! / (k-1)!
    BigInt expect = factorial(static_cast<unsigned long>(k + n - 1)) /
                    factorial(static_cast<unsigned long>(k - 1));
    c.expected = (n / 2) % 2 == 0 ? Rational(expect) : -Rational(expect);
    return c;
}

RationalFn flat_radial_identity(int n) {
    check_even(n, "flat_radial_identity");
    Poly one_plus_r2 = Poly::from_coeffs({Rational(1), Rational(0), Rational(1)});
    // first derivative of log(1+r^2), seeded by hand: 2r/(1+r^2)
    RationalFn dlog(Poly::monomial(1, Rational(2)), one_plus_r2);
    RationalFn lap = radial_laplacian_from_derivative(dlog, n);
    for (int j = 1; j < n / 2; ++j) lap = radial_laplacian(lap, n);
    if (n / 2 % 2 == 1) lap = -lap;  // (-Delta)^{n/2}

    Rational coeff = -Rational(factorial(static_cast<unsigned long>(n - 1))) *
                     Rational(2).pow(n);
    RationalFn target(Poly(coeff), one_plus_r2.pow(static_cast<unsigned>(n)));
    return lap - target;
}

std::vector<double> meanfield_residual(const Poly& u, int n, const std::vector<double>& xs) {
    check_even(n, "meanfield_residual");
    Poly pnu = axial_Pn(u, n);
    const double fact = factorial(static_cast<unsigned long>(n - 1)).get_d();
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        if (!(x > -1.0 && x < 1.0))
            throw std::domain_error("meanfield_residual: samples must lie in (-1,1)");
        const double lhs = pnu.eval(x) / (n + 1.0);
        const double rhs = fact * (std::exp(n * u.eval(x)) - 1.0);
        out.push_back(lhs - rhs);
    }
    return out;
}

}  // namespace sphgreen
