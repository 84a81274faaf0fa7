#ifndef SPHGREEN_AXIAL_OPERATOR_HPP
#define SPHGREEN_AXIAL_OPERATOR_HPP

#include <vector>

#include "sphgreen/poly.hpp"

namespace sphgreen {

/// P_n u = (-1)^{n/2} [(1-x^2)^{n/2} u']^{(n-1)} on axially symmetric
/// polynomials u(x_{n+1}); exact, n even.
Poly axial_Pn(const Poly& u, int n);

/// Q u = [(1-x^2)^{n/2} u']^{(n-1)} (the operator before the sign).
Poly axial_Q(const Poly& u, int n);

/// u_k = (1-x^2)^{-(n-2)/2} d^k/dx^k (1-x^2)^{k+(n-2)/2}; the division is
/// checked to be exact (a structural assertion, not a rounding question).
Poly u_k_family(int n, int k);

/// Exact value of the weighted inner product of Q u_k with u_l (k != l): zero.
Rational verify_orthogonality(int n, int k, int l);

struct AxialEigenCheck {
    Rational computed;  // exact Rayleigh quotient of Q on u_k
    Rational expected;  // (-1)^{n/2} Gamma(k+n)/Gamma(k) as an exact rational
};
AxialEigenCheck verify_eigenvalue(int n, int k);

/// Exact residual of the flat-space identity relating the n/2-fold radial
/// Laplacian of log(1+r^2) to -(n-1)! (2/(1+r^2))^n; zero for every even n.
RationalFn flat_radial_identity(int n);

/// Pointwise residual of (1/(n+1)) P_n u - (n-1)! (e^{n u} - 1).
std::vector<double> meanfield_residual(const Poly& u, int n, const std::vector<double>& xs);

}  // namespace sphgreen

#endif
