#ifndef SPHGREEN_GEODESIC_HPP
#define SPHGREEN_GEODESIC_HPP

#include <Eigen/Dense>

#include <vector>

#include "sphgreen/hypersurface.hpp"
#include "sphgreen/report.hpp"

namespace sphgreen {

struct GeodesicSample {
    double r = 0.0;    // arclength from the base point
    double rho = 0.0;  // squared chord to the base point
    Eigen::VectorXd x;
};

/// Unit-speed geodesic shooting from the base point by classical RK4 with a
/// fixed step r_max/samples. Aborts when the unit-speed drift exceeds 1e-6;
/// final_drift, when given, receives the drift at r_max.
std::vector<GeodesicSample> geodesic_shoot(const GraphSurface& s, Eigen::VectorXd v,
                                           double r_max, int samples = 4096,
                                           double* final_drift = nullptr);

struct QuarticFit {
    double c4 = 0.0;
    double b1 = 0.0, b2 = 0.0;  // diagnostic fit rho ~ b1 r + b2 r^2 + c4 r^4
    double condition = 0.0;
    bool ill_conditioned = false;
};

/// Weighted least-squares estimate of c4 in rho = r^2 + c4 r^4 over samples
/// with r <= r_cut; the b1/b2 diagnostics come from the unconstrained fit.
QuarticFit quartic_fit(const std::vector<GeodesicSample>& samples, double r_cut);

/// |c4 + II(v,v)^2/12| with II from the Hessian oracle at the base point;
/// r_cut selected by scanning {0.05, 0.1, 0.2} for the plateau.
ResidualReport chord_expansion_check(const GraphSurface& s, Eigen::VectorXd v);

}  // namespace sphgreen

#endif
