#ifndef SPHGREEN_ASYMPTOTIC_MASS_HPP
#define SPHGREEN_ASYMPTOTIC_MASS_HPP

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "sphgreen/hypersurface.hpp"

namespace sphgreen {

/// Quadrature rule on the unit sphere S^{n-1} in R^n: a tensor product of
/// Gauss rules in the polar cosines and an equispaced rule in the azimuth.
struct SphereRule {
    std::vector<Eigen::VectorXd> dirs;
    std::vector<double> weights;  // sum to |S^{n-1}|
};
SphereRule sphere_quadrature(int n, int order);
SphereRule sphere_quadrature_rotated(int n, int order, const Eigen::MatrixXd& rotation);

/// Pullback metric g_hat(y) = rho^{-2} J^T g J under the inversion x = y/|y|^2.
Eigen::MatrixXd inverted_metric(const GraphSurface& s, const Eigen::VectorXd& y);

/// Flux integral of the mass integrand over the coordinate sphere |y| = r,
/// with the radial derivative by 4th-order central differences.
/// When refine_delta is supplied it receives the change under order doubling;
/// rotation, when given, rotates the quadrature frame (the result must not
/// depend on it beyond quadrature error).
double mass_estimate(const GraphSurface& s, double r, int sphere_quadrature_order,
                     double* refine_delta = nullptr,
                     const Eigen::MatrixXd* rotation = nullptr);

/// Least-squares slope of log|m| against log r.
double decay_slope(const std::vector<double>& radii, const std::vector<double>& masses);

/// Richardson limit of the mass samples. On geometrically spaced radii the
/// two leading decay modes r^{n-6} and r^{n-8} are eliminated with their known
/// ratios; otherwise falls back to Aitken's delta-squared on the last three.
double extrapolate_mass(const std::vector<double>& radii, const std::vector<double>& masses,
                        int n);

struct DecayFit {
    double exponent = 0.0;          // log-log slope of |m(r)|
    double extrapolated_mass = 0.0; // Richardson limit of m(r)
    bool exact_zero = false;        // all samples below the numerical floor
    bool monotone = true;           // |m| nonincreasing along the radii
    std::vector<double> masses;
};
DecayFit decay_fit(const GraphSurface& s, const std::vector<double>& radii,
                   int sphere_quadrature_order = 32);

}  // namespace sphgreen

#endif
