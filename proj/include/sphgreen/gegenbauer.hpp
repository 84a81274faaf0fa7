#ifndef SPHGREEN_GEGENBAUER_HPP
#define SPHGREEN_GEGENBAUER_HPP

#include <functional>
#include <vector>

#include "sphgreen/errors.hpp"
#include "sphgreen/poly.hpp"
#include "sphgreen/rational.hpp"

namespace sphgreen {

/// Degree-k Gegenbauer polynomial for rational lambda > -1/2, exact
/// coefficients from the three-term recurrence (normalization P_1 = 2*lambda*x).
Poly gegenbauer_poly(const Rational& lambda, int k);

/// Same polynomial from the Rodrigues form; exact only when lambda - 1/2 is a
/// nonnegative integer (otherwise throws).
Poly gegenbauer_rodrigues(const Rational& lambda, int k);

struct GegenbauerBasis {
    Rational lambda;
    std::vector<Poly> polys;  // polys[k] has exact degree k
};
GegenbauerBasis make_gegenbauer_basis(const Rational& lambda, int max_degree);

/// Recurrence evaluation in doubles (stable for |x| <= 1).
double gegenbauer_eval(double lambda, int k, double x);
double gegenbauer_eval_derivative(double lambda, int k, double x);

/// P^lambda_k(1) = Gamma(k+2*lambda) / (Gamma(2*lambda) Gamma(k+1)).
double gegenbauer_at_one(double lambda, int k);

/// Closed-form L^2 norm under the weight (1-x^2)^{lambda-1/2}.
double gegenbauer_norm_sq(const Rational& lambda, int k);
double gegenbauer_norm_sq(double lambda, int k);

struct QuadratureRule {
    std::vector<double> nodes;    // ascending in (-1,1)
    std::vector<double> weights;  // positive
    double integrate(const std::function<double(double)>& f) const;
};

/// Gauss rule for the weight (1-x^2)^{lambda-1/2}: nodes are the roots of the
/// degree-count Gegenbauer polynomial (Newton with bisection safeguard),
/// weights via the Christoffel function. Exact on polynomials of degree
/// <= 2*count - 1.
QuadratureRule gauss_jacobi_rule(const Rational& lambda, int count);

/// tanh-sinh rule on (-1,1) for integrands with endpoint singularities.
/// The integrand receives (x, 1-x, 1+x) with the endpoint distances computed
/// in a cancellation-free form.
double tanh_sinh_integrate(const std::function<double(double, double, double)>& f,
                           double tol = 1e-13, int max_level = 11);

}  // namespace sphgreen

#endif
