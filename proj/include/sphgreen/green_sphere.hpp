#ifndef SPHGREEN_GREEN_SPHERE_HPP
#define SPHGREEN_GREEN_SPHERE_HPP

#include <vector>

#include "sphgreen/gjms_spectrum.hpp"
#include "sphgreen/report.hpp"

namespace sphgreen {

/// Sphere dimension plus operator order; construction validates that the
/// Green function exists (kernel at most constants, sigma away from poles).
struct GreenSpec {
    int n;
    OperatorOrder order;

    GreenSpec(int n, OperatorOrder order);
    bool critical() const { return order.kind == OperatorOrder::Kind::Critical; }
    double sigma() const { return order.sigma_for(n); }
};

struct SeriesConfig {
    long max_terms = 50000;
    enum class Accel { None, CesaroAveraging, EulerTransform } accel = Accel::CesaroAveraging;
    double target_tol = 1e-6;
    /// Iterated-averaging depth; 0 selects automatically (3 levels, deepened
    /// when the term magnitudes grow like k^{n-1-2sigma} at the antipode).
    int cesaro_levels = 0;
};

struct SeriesResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long terms = 0;
    bool diverged = false;
};

/// c_n = 2/((n-1)! |S^n|) = 1/(2^{n-1} pi^{n/2} Gamma(n/2)).
double const_critical(int n);

/// c_{n,sigma} = Gamma(n/2-sigma) / (2^{2sigma} pi^{n/2} Gamma(sigma)),
/// sign preserved when Gamma(n/2-sigma) < 0.
double const_power(int n, double sigma);

/// Closed form at the given extrinsic chord distance (critical case returned
/// with additive constant zero).
double green_closed(const GreenSpec& spec, double chord);

/// Squared chord from x = -P.Q: 2(1+x).
double chord_sq_from_inner(double x);

/// Accelerated partial sums of the spectral series at x = -P.Q in (-1, 1].
SeriesResult series_partial(const GreenSpec& spec, double x, const SeriesConfig& cfg);

/// Snapshots of the accelerated sum at ascending term counts (one pass).
std::vector<SeriesResult> series_partial_checkpoints(const GreenSpec& spec, double x,
                                                     const SeriesConfig& cfg,
                                                     const std::vector<long>& checkpoints);

/// Closed form of the weighted log moment over [-1,1] (k >= 1).
double moment_closed_log(int n, int k);

/// Closed form of the weighted power moment over [-1,1] (k >= 0).
double moment_closed_pow(int n, double sigma, int k);

/// Independent tanh-sinh quadrature of the same moments.
double moment_quad_log(int n, int k);
double moment_quad_pow(int n, double sigma, int k);

/// The coefficient-matching residual: series-side inner product versus the
/// closed-form moment, both computed independently.
ResidualReport coefficient_match(const GreenSpec& spec, int k, double tol = 1e-9);

}  // namespace sphgreen

#endif
