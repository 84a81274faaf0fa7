#include "sphgreen/gjms_spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sphgreen/rational.hpp"
#include "sphgreen/scalar_kernel.hpp"

namespace sphgreen {

OperatorOrder OperatorOrder::integer(int k) {
    if (k < 1) throw std::invalid_argument("OperatorOrder::integer: k must be positive");
    return {Kind::Integer, k, 0.0};
}

OperatorOrder OperatorOrder::fractional(double sigma) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("OperatorOrder::fractional: sigma must be positive");
    return {Kind::Fractional, 0, sigma};
}

double OperatorOrder::sigma_for(int n) const {
    switch (kind) {
        case Kind::Critical: return 0.5 * n;
        case Kind::Integer: return static_cast<double>(k);
        case Kind::Fractional: return sigma;
    }
    return 0.0;
}

std::string OperatorOrder::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Critical: os << "critical"; break;
        case Kind::Integer: os << "k=" << k; break;
        case Kind::Fractional: os << "sigma=" << sigma; break;
    }
    return os.str();
}

const char* to_string(KernelStatus s) {
    switch (s) {
        case KernelStatus::TrivialKernel: return "TrivialKernel";
        case KernelStatus::ConstantsOnly: return "ConstantsOnly";
        case KernelStatus::NontrivialKernel: return "NontrivialKernel";
    }
    return "?";
}

KernelStatus kernel_status(int n, const OperatorOrder& order) {
    if (n < 2) throw std::invalid_argument("kernel_status: n must be >= 2");
    switch (order.kind) {
        case OperatorOrder::Kind::Critical:
            return KernelStatus::ConstantsOnly;
        case OperatorOrder::Kind::Integer: {
            // Factor i of the product annihilates degree-j harmonics iff
            // j(j+n-1) = (i - n/2)(i + n/2 - 1) for an integer j >= 0, i.e.
            // j = i - n/2. Scan in exact integers (doubled to stay integral).
            for (int i = 1; i <= order.k; ++i) {
                const long two_j = 2L * i - n;
                if (two_j >= 0 && two_j % 2 == 0) return KernelStatus::NontrivialKernel;
            }
            return KernelStatus::TrivialKernel;
        }
        case OperatorOrder::Kind::Fractional: {
            const double sigma = order.sigma;
            if (std::fabs(sigma - 0.5 * n) <= 1e-9) return KernelStatus::ConstantsOnly;
            validate_sigma_for_green(n, sigma);
            return KernelStatus::TrivialKernel;
        }
    }
    throw std::logic_error("kernel_status: unreachable");
}

double eig_critical(int n, int l) {
    if (n < 2) throw std::invalid_argument("eig_critical: n must be >= 2");
    if (l < 1) throw std::invalid_argument("eig_critical: l must be >= 1");
    // Gamma(l+n)/Gamma(l) = l (l+1) ... (l+n-1)
    if (l + n <= 30) {
        double prod = 1.0;
        for (int j = 0; j < n; ++j) prod *= (l + j);
        return prod;
    }
    return std::exp(log_gamma(static_cast<double>(l + n)) - log_gamma(static_cast<double>(l)));
}

double eig_fractional(int n, double sigma, int k) {
    if (n < 2) throw std::invalid_argument("eig_fractional: n must be >= 2");
    if (k < 0) throw std::invalid_argument("eig_fractional: k must be >= 0");
    if (!(sigma > 0.0)) throw std::invalid_argument("eig_fractional: sigma must be positive");
    const double half_n = 0.5 * n;
    for (int m = 1; sigma >= half_n + m - 1.0; ++m) {
        if (std::fabs(sigma - (half_n + m)) <= 1e-9)
            throw KernelObstructionError(
                "eig_fractional: sigma = n/2 + " + std::to_string(m) +
                " puts low spherical-harmonic degrees in the kernel");
    }
    const double denom_arg = k + half_n - sigma;
    if (denom_arg <= 0.0 && denom_arg == std::floor(denom_arg))
        return 0.0;  // Gamma pole in the denominator: eigenvalue vanishes
    return gamma_ratio(k + half_n + sigma, denom_arg);
}

double eig_product_form(int n, int k_order, int degree) {
    if (k_order < 1) throw std::invalid_argument("eig_product_form: order must be positive");
    const double mu = static_cast<double>(degree) * (degree + n - 1);
    double prod = 1.0;
    for (int i = 1; i <= k_order; ++i)
        prod *= mu + (0.5 * n + i - 1.0) * (0.5 * n - i);
    return prod;
}

long long harmonic_dim(int n, int k) {
    if (n < 2) throw std::invalid_argument("harmonic_dim: n must be >= 2");
    if (k < 0) throw std::invalid_argument("harmonic_dim: k must be >= 0");
    if (k == 0) return 1;
    // (n+2k-1) (n+k-2)! / ((n-1)! k!)
    BigInt num = BigInt(n + 2 * k - 1) * factorial(static_cast<unsigned long>(n + k - 2));
    BigInt den = factorial(static_cast<unsigned long>(n - 1)) *
                 factorial(static_cast<unsigned long>(k));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (!q.fits_slong_p())
        throw std::overflow_error("harmonic_dim: result exceeds long long range");
    return q.get_si();
}

double funk_hecke_coeff(int n, int k) {
    if (n < 2) throw std::invalid_argument("funk_hecke_coeff: n must be >= 2");
    if (k < 0) throw std::invalid_argument("funk_hecke_coeff: k must be >= 0");
    return (n + 2.0 * k - 1.0) / ((n - 1.0) * sphere_volume(n));
}

void validate_sigma_for_green(int n, double sigma, double guard_tol) {
    if (!(sigma > 0.0))
        throw std::invalid_argument("sigma must be positive, got " + std::to_string(sigma));
    const double half_n = 0.5 * n;
    for (int m = 0; half_n + m <= sigma + 1.0; ++m) {
        if (std::fabs(sigma - (half_n + m)) <= guard_tol) {
            if (m == 0)
                throw PoleError("sigma = n/2 is the critical order; use the critical form");
            throw KernelObstructionError("sigma = n/2 + " + std::to_string(m) +
                                         ": Green function does not exist (kernel)");
        }
    }
}

}  // namespace sphgreen
