#include "sphgreen/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphgreen/scalar_kernel.hpp"

namespace sphgreen {

namespace {

void check_lambda(const Rational& lambda) {
    if (lambda <= Rational(-1, 2))
        throw std::domain_error("gegenbauer: lambda must exceed -1/2, got " + lambda.str());
}

}  // namespace

Poly gegenbauer_poly(const Rational& lambda, int k) {
    check_lambda(lambda);
    if (k < 0) throw std::invalid_argument("gegenbauer_poly: negative degree");
    Poly p0(Rational(1));
    if (k == 0) return p0;
    Poly p1 = Poly::monomial(1, Rational(2) * lambda);
    for (int j = 2; j <= k; ++j) {
        // j P_j = 2(j+lambda-1) x P_{j-1} - (j+2lambda-2) P_{j-2}
        Rational a = (Rational(2) * (Rational(j) + lambda - Rational(1))) / Rational(j);
        Rational b = (Rational(j) + Rational(2) * lambda - Rational(2)) / Rational(j);
        Poly pj = (Poly::x() * p1).scaled(a) - p0.scaled(b);
        p0 = std::move(p1);
        p1 = std::move(pj);
    }
    return p1;
}

Poly gegenbauer_rodrigues(const Rational& lambda, int k) {
    check_lambda(lambda);
    if (k < 0) throw std::invalid_argument("gegenbauer_rodrigues: negative degree");
    const Rational m = lambda - Rational(1, 2);
    if (!m.is_integer() || m.sign() < 0)
        throw std::domain_error(
            "gegenbauer_rodrigues: exact path needs lambda - 1/2 a nonnegative integer");
    const long mi = static_cast<long>(m.numerator().get_si());

    // prefactor (-2)^k/k! * (lambda)_k / (2lambda+k)_k
    Rational pre(1);
    for (int i = 0; i < k; ++i) {
        pre *= Rational(-2) * (lambda + Rational(i));
        pre /= Rational(i + 1);
        pre /= Rational(2) * lambda + Rational(k + i);
    }

    Poly one_minus_x2 = Poly::from_coeffs({Rational(1), Rational(0), Rational(-1)});
    Poly inner = one_minus_x2.pow(static_cast<unsigned>(k + mi)).derivative(k);
    Poly quotient = inner.divexact(one_minus_x2.pow(static_cast<unsigned>(mi)));
    return quotient.scaled(pre);
}

GegenbauerBasis make_gegenbauer_basis(const Rational& lambda, int max_degree) {
    check_lambda(lambda);
    GegenbauerBasis b;
    b.lambda = lambda;
    b.polys.reserve(static_cast<size_t>(max_degree) + 1);
    Poly p0(Rational(1));
    b.polys.push_back(p0);
    if (max_degree == 0) return b;
    Poly p1 = Poly::monomial(1, Rational(2) * lambda);
    b.polys.push_back(p1);
    for (int j = 2; j <= max_degree; ++j) {
        Rational a = (Rational(2) * (Rational(j) + lambda - Rational(1))) / Rational(j);
        Rational c = (Rational(j) + Rational(2) * lambda - Rational(2)) / Rational(j);
        Poly pj = (Poly::x() * b.polys[static_cast<size_t>(j - 1)]).scaled(a) -
                  b.polys[static_cast<size_t>(j - 2)].scaled(c);
        b.polys.push_back(std::move(pj));
    }
    return b;
}

double gegenbauer_eval(double lambda, int k, double x) {
    if (k < 0) throw std::invalid_argument("gegenbauer_eval: negative degree");
    if (k == 0) return 1.0;
    double y0 = 1.0;
    double y1 = 2.0 * lambda * x;
    for (int j = 2; j <= k; ++j) {
        double yj = (2.0 * (j + lambda - 1.0) * x * y1 - (j + 2.0 * lambda - 2.0) * y0) / j;
        y0 = y1;
        y1 = yj;
    }
    return y1;
}

double gegenbauer_eval_derivative(double lambda, int k, double x) {
    if (k <= 0) return 0.0;
    return 2.0 * lambda * gegenbauer_eval(lambda + 1.0, k - 1, x);
}

double gegenbauer_at_one(double lambda, int k) {
    return gamma_ratio(k + 2.0 * lambda, 2.0 * lambda) / gamma_real(k + 1.0);
}

double gegenbauer_norm_sq(double lambda, int k) {
    // 2^{1-2l} pi Gamma(k+2l) / (Gamma(l)^2 (k+l) Gamma(k+1))
    const double log_val = (1.0 - 2.0 * lambda) * std::numbers::ln2 +
                           std::log(std::numbers::pi) + log_gamma(k + 2.0 * lambda) -
                           2.0 * log_gamma(lambda) - std::log(k + lambda) -
                           log_gamma(k + 1.0);
    return std::exp(log_val);
}

double gegenbauer_norm_sq(const Rational& lambda, int k) {
    check_lambda(lambda);
    return gegenbauer_norm_sq(lambda.to_double(), k);
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
    double s = 0.0, comp = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        // Kahan compensation keeps the fixed-order sum deterministic and tight.
        double term = weights[i] * f(nodes[i]) - comp;
        double next = s + term;
        comp = (next - s) - term;
        s = next;
    }
    return s;
}

QuadratureRule gauss_jacobi_rule(const Rational& lambda, int count) {
    check_lambda(lambda);
    if (lambda == Rational(0))
        throw std::domain_error("gauss_jacobi_rule: lambda=0 normalization is degenerate");
    if (count < 1) throw std::invalid_argument("gauss_jacobi_rule: count must be positive");
    const double lam = lambda.to_double();
    const int n = count;

    auto poly_n = [&](double x) { return gegenbauer_eval(lam, n, x); };

    // Bracket the n simple roots by a sign scan over a Chebyshev-spaced grid.
    std::vector<std::pair<double, double>> brackets;
    for (int grid = 8 * n + 16; brackets.size() != static_cast<size_t>(n); grid *= 4) {
        brackets.clear();
        double xl = std::cos(std::numbers::pi * (1.0 - 0.5 / grid));
        double fl = poly_n(xl);
        for (int j = 1; j <= grid; ++j) {
            double xr = std::cos(std::numbers::pi * (1.0 - (j + 0.5) / grid));
            xr = std::min(xr, 1.0);
            double fr = poly_n(xr);
            if ((fl < 0.0) != (fr < 0.0)) brackets.emplace_back(xl, xr);
            xl = xr;
            fl = fr;
        }
        if (grid > (1 << 22))
            throw ConvergenceError("gauss_jacobi_rule: failed to bracket all nodes");
    }

    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        auto [lo, hi] = brackets[static_cast<size_t>(i)];
        double flo = poly_n(lo);
        double x = 0.5 * (lo + hi);
        bool done = false;
        for (int it = 0; it < 100; ++it) {
            double fx = poly_n(x);
            if ((fx < 0.0) == (flo < 0.0)) lo = x; else hi = x;
            double dfx = gegenbauer_eval_derivative(lam, n, x);
            double step = dfx != 0.0 ? fx / dfx : 0.0;
            double next = x - step;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
            double delta = std::fabs(next - x);
            x = next;
            if (delta < 1e-15) {
                done = true;
                break;
            }
        }
        if (!done)
            throw ConvergenceError("gauss_jacobi_rule: node " + std::to_string(i) +
                                   " did not converge");
        rule.nodes[static_cast<size_t>(i)] = x;
    }
    std::sort(rule.nodes.begin(), rule.nodes.end());
    // The weight is even; symmetrize paired roots to cancel solver noise.
    for (int i = 0, j = n - 1; i < j; ++i, --j) {
        double m = 0.5 * (rule.nodes[static_cast<size_t>(i)] - rule.nodes[static_cast<size_t>(j)]);
        rule.nodes[static_cast<size_t>(i)] = m;
        rule.nodes[static_cast<size_t>(j)] = -m;
    }
    if (n % 2 == 1) rule.nodes[static_cast<size_t>(n / 2)] = 0.0;

    // Christoffel-function weights: 1 / sum_j P_j(x)^2 / h_j.
    std::vector<double> inv_norm(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        inv_norm[static_cast<size_t>(j)] = 1.0 / gegenbauer_norm_sq(lam, j);
    rule.weights.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = rule.nodes[static_cast<size_t>(i)];
        double acc = inv_norm[0];
        double y0 = 1.0, y1 = 2.0 * lam * x;
        if (n > 1) acc += y1 * y1 * inv_norm[1];
        for (int j = 2; j < n; ++j) {
            double yj = (2.0 * (j + lam - 1.0) * x * y1 - (j + 2.0 * lam - 2.0) * y0) / j;
            y0 = y1;
            y1 = yj;
            acc += yj * yj * inv_norm[static_cast<size_t>(j)];
        }
        rule.weights[static_cast<size_t>(i)] = 1.0 / acc;
    }
    return rule;
}

double tanh_sinh_integrate(const std::function<double(double, double, double)>& f,
                           double tol, int max_level) {
    constexpr double kHalfPi = std::numbers::pi / 2.0;
    constexpr double t_max = 4.0;

    auto eval_point = [&](double t) -> double {
        const double s = kHalfPi * std::sinh(t);
        const double x = std::tanh(s);
        const double e2s = std::exp(-2.0 * std::fabs(s));
        double om, op;  // 1-x and 1+x, no cancellation
        if (s >= 0.0) {
            om = 2.0 * e2s / (1.0 + e2s);
            op = 2.0 / (1.0 + e2s);
        } else {
            om = 2.0 / (1.0 + e2s);
            op = 2.0 * e2s / (1.0 + e2s);
        }
        const double ch = std::cosh(s);
        const double v = kHalfPi * std::cosh(t) / (ch * ch);
        if (v == 0.0 || !std::isfinite(v)) return 0.0;
        const double fv = f(x, om, op);
        return std::isfinite(fv) ? v * fv : 0.0;
    };

    double h = 1.0;
    double sum = eval_point(0.0);
    for (int j = 1; j * h <= t_max; ++j) sum += eval_point(j * h) + eval_point(-j * h);
    double integral = h * sum;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int j = 1; j * h <= t_max; j += 2) add += eval_point(j * h) + eval_point(-j * h);
        sum += add;
        const double next = h * sum;
        const double change = std::fabs(next - integral);
        integral = next;
        if (level >= 3 && change <= tol * std::max(1.0, std::fabs(integral))) break;
    }
    return integral;
}

}  // namespace sphgreen
