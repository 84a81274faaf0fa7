#ifndef SPHGREEN_GJMS_SPECTRUM_HPP
#define SPHGREEN_GJMS_SPECTRUM_HPP

#include <string>

#include "sphgreen/errors.hpp"

namespace sphgreen {

/// Order selector: the critical operator (2*gamma = n), an integer order 2k,
/// or a fractional order 2*sigma.
struct OperatorOrder {
    enum class Kind { Critical, Integer, Fractional };
    Kind kind = Kind::Critical;
    int k = 0;
    double sigma = 0.0;

    static OperatorOrder critical() { return {Kind::Critical, 0, 0.0}; }
    static OperatorOrder integer(int k);
    static OperatorOrder fractional(double sigma);

    /// The effective order parameter sigma for dimension n.
    double sigma_for(int n) const;
    std::string str() const;
};

enum class KernelStatus { TrivialKernel, ConstantsOnly, NontrivialKernel };
const char* to_string(KernelStatus s);

/// Kernel classification using the exact integer factor test on the product
/// factorization (never floating-point eigenvalue magnitudes).
KernelStatus kernel_status(int n, const OperatorOrder& order);

/// Critical eigenvalue ladder Gamma(l+n)/Gamma(l).
double eig_critical(int n, int l);

/// Fractional ladder Gamma(k+n/2+sigma)/Gamma(k+n/2-sigma).
/// sigma = n/2 is admitted (the critical operator: the k=0 eigenvalue is 0);
/// sigma within 1e-9 of n/2+m for integer m >= 1 throws (Gamma pole makes
/// low-degree eigenvalues vanish: kernel obstruction).
double eig_fractional(int n, double sigma, int k);

/// Product-form oracle for integer order: prod_{i=1..k} (mu_j + (n/2+i-1)(n/2-i))
/// at the Laplacian eigenvalue mu_j = j(j+n-1).
double eig_product_form(int n, int k_order, int degree);

/// Exact dimension of the space of degree-k spherical harmonics on S^n.
long long harmonic_dim(int n, int k);

/// Addition-theorem coefficient c_{k,n} = (n+2k-1) / ((n-1)|S^n|).
double funk_hecke_coeff(int n, int k);

/// Rejects sigma within guard_tol of n/2 + m for any integer m >= 0
/// (Gamma-pole proximity destroys the Green constants' conditioning).
void validate_sigma_for_green(int n, double sigma, double guard_tol = 1e-9);

}  // namespace sphgreen

#endif
