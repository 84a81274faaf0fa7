#ifndef SPHGREEN_SCALAR_KERNEL_HPP
#define SPHGREEN_SCALAR_KERNEL_HPP

#include <utility>

#include "sphgreen/errors.hpp"

namespace sphgreen {

/// Gamma function on the reals; negative non-integer arguments via reflection.
/// Throws PoleError at z in {0, -1, -2, ...}.
double gamma_real(double z);

/// ln Gamma(z) for z > 0, Lanczos evaluation (relative error well under 1e-13
/// for z <= 1e6). Throws std::domain_error for z <= 0.
double log_gamma(double z);

/// (sign, ln|Gamma(z)|) for any non-pole real z.
std::pair<int, double> log_gamma_signed(double z);

/// Gamma(a)/Gamma(b), routed through log-Gamma differences once either
/// argument exceeds 30; sign-correct for negative non-integer arguments.
double gamma_ratio(double a, double b);

/// Surface measure of the unit n-sphere in R^{n+1}.
double sphere_volume(int n);

}  // namespace sphgreen

#endif
