#include "sphgreen/asymptotic_mass.hpp"

#include <cmath>
#include <numbers>

#include "sphgreen/gegenbauer.hpp"

namespace sphgreen {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Kahan-compensated accumulator; fixed summation order keeps runs bit-identical.
struct Compensated {
    double sum = 0.0, comp = 0.0;
    void add(double v) {
        double term = v - comp;
        double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
};

}  // namespace

SphereRule sphere_quadrature(int n, int order) {
    return sphere_quadrature_rotated(n, order, MatrixXd::Identity(n, n));
}

SphereRule sphere_quadrature_rotated(int n, int order, const Eigen::MatrixXd& rotation) {
    if (n < 2) throw std::invalid_argument("sphere_quadrature: ambient dimension must be >= 2");
    if (order < 2) throw std::invalid_argument("sphere_quadrature: order must be >= 2");

    // Polar angles theta_1..theta_{n-2} carry weights sin^{n-1-i}; u = cos theta
    // turns each into the Gegenbauer weight (1-u^2)^{(m-1)/2}, lambda = m/2.
    std::vector<QuadratureRule> polar;
    for (int i = 1; i <= n - 2; ++i) {
        const int m = n - 1 - i;
        polar.push_back(gauss_jacobi_rule(Rational(m, 2), order));
    }
    const int azimuth = 2 * order;

    SphereRule rule;
    std::vector<size_t> idx(polar.size(), 0);
    while (true) {
        double w = 1.0;
        std::vector<double> cosines(polar.size()), sines(polar.size());
        for (size_t i = 0; i < polar.size(); ++i) {
            const double u = polar[i].nodes[idx[i]];
            w *= polar[i].weights[idx[i]];
            cosines[i] = u;
            sines[i] = std::sqrt(std::max(0.0, 1.0 - u * u));
        }
        for (int j = 0; j < azimuth; ++j) {
            const double phi = 2.0 * std::numbers::pi * (j + 0.5) / azimuth;
            VectorXd dir(n);
            double prefix = 1.0;
            for (size_t i = 0; i < polar.size(); ++i) {
                dir[static_cast<long>(i)] = prefix * cosines[i];
                prefix *= sines[i];
            }
            dir[n - 2] = prefix * std::cos(phi);
            dir[n - 1] = prefix * std::sin(phi);
            rule.dirs.push_back(rotation * dir);
            rule.weights.push_back(w * 2.0 * std::numbers::pi / azimuth);
        }
        // advance the polar multi-index
        size_t pos = 0;
        for (; pos < idx.size(); ++pos) {
            if (++idx[pos] < polar[pos].nodes.size()) break;
            idx[pos] = 0;
        }
        if (pos == idx.size()) break;
        if (polar.empty()) break;
    }
    return rule;
}

Eigen::MatrixXd inverted_metric(const GraphSurface& s, const Eigen::VectorXd& y) {
    const int n = s.dim();
    if (y.size() != n) throw std::invalid_argument("inverted_metric: dimension mismatch");
    const double r2 = y.squaredNorm();
    if (!(r2 > 0.0)) throw std::domain_error("inverted_metric: y must be nonzero");
    const VectorXd x = y / r2;
    const SurfaceJet j = s.jet(x, 1);

    // J = dx/dy = (I - 2 yhat yhat^T)/|y|^2 and rho^{-2} = |y|^4/(1+|y|^2 f^2)^2
    // combine into the bounded conformal factor below.
    const VectorXd yhat = y / std::sqrt(r2);
    MatrixXd reflect = MatrixXd::Identity(n, n) - 2.0 * yhat * yhat.transpose();
    MatrixXd g = MatrixXd::Identity(n, n) + j.grad * j.grad.transpose();
    const double conf = 1.0 + r2 * j.f * j.f;
    return (reflect * g * reflect) / (conf * conf);
}

double mass_estimate(const GraphSurface& s, double r, int sphere_quadrature_order,
                     double* refine_delta, const Eigen::MatrixXd* rotation) {
    const int n = s.dim();
    if (n < 3 || n > 5)
        throw std::invalid_argument(
            "mass_estimate: the flux integral is asserted for dimensions 3..5 only");
    if (!(r > 0.0)) throw std::invalid_argument("mass_estimate: radius must be positive");
    if (1.0 / r >= s.chart_radius())
        throw ChartError("mass_estimate: radius too small for the inverted chart");

    auto run = [&](int order) {
        const SphereRule rule = rotation ? sphere_quadrature_rotated(n, order, *rotation)
                                         : sphere_quadrature(n, order);
        Compensated acc;
        for (size_t i = 0; i < rule.dirs.size(); ++i) {
            const VectorXd& w = rule.dirs[i];
            // With J = (I - 2 w w^T)/|y|^2 the reflection drops out of both
            // contractions: along the ray y = s w,
            //   g_rr  = (1 + (w.grad f)^2) / B^2,   tr g_hat = (n + |grad f|^2) / B^2,
            // at x = w/s with B = 1 + s^2 f^2. The radial derivative of
            // phi = g_rr - tr g_hat follows exactly from the Hessian oracle via
            // dx/ds = -w/s^2 (no finite differences; their roundoff drowns the
            // r^{n-6} signal at large radii).
            const SurfaceJet jy = s.jet(w / r, 2);
            const double u = w.dot(jy.grad);
            const double w2 = jy.grad.squaredNorm();
            const double A = 1.0 - n + u * u - w2;
            const double B = 1.0 + r * r * jy.f * jy.f;
            const Eigen::VectorXd hw = jy.hess * w;
            const double dA = (2.0 / (r * r)) * (jy.grad.dot(hw) - u * w.dot(hw));
            const double dB = 2.0 * r * jy.f * jy.f - 2.0 * jy.f * u;
            const double d_phi = (dA * B - 2.0 * A * dB) / (B * B * B);
            const double integrand = d_phi + (n * u * u - w2) / (B * B) / r;
            acc.add(rule.weights[i] * integrand);
        }
        return acc.sum * std::pow(r, n - 1);
    };

    const double value = run(sphere_quadrature_order);
    if (refine_delta) *refine_delta = run(2 * sphere_quadrature_order) - value;
    return value;
}

DecayFit decay_fit(const GraphSurface& s, const std::vector<double>& radii,
                   int sphere_quadrature_order) {
    if (radii.size() < 3) throw std::invalid_argument("decay_fit: need at least 3 radii");
    for (size_t i = 1; i < radii.size(); ++i)
        if (radii[i] <= radii[i - 1])
            throw std::invalid_argument("decay_fit: radii must be increasing");

    DecayFit fit;
    for (double r : radii) fit.masses.push_back(mass_estimate(s, r, sphere_quadrature_order));

    const double floor = 1e-12;
    bool all_floor = true;
    for (double m : fit.masses) all_floor = all_floor && std::fabs(m) < floor;
    if (all_floor) {
        fit.exact_zero = true;
        fit.exponent = std::numeric_limits<double>::quiet_NaN();
        fit.extrapolated_mass = 0.0;
        return fit;
    }

    for (size_t i = 1; i < fit.masses.size(); ++i)
        if (std::fabs(fit.masses[i]) > std::fabs(fit.masses[i - 1])) fit.monotone = false;

    fit.exponent = decay_slope(radii, fit.masses);
    fit.extrapolated_mass = extrapolate_mass(radii, fit.masses, s.dim());
    return fit;
}

double decay_slope(const std::vector<double>& radii, const std::vector<double>& masses) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto count = static_cast<double>(radii.size());
    for (size_t i = 0; i < radii.size(); ++i) {
        const double lx = std::log(radii[i]);
        const double ly = std::log(std::max(std::fabs(masses[i]), 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double extrapolate_mass(const std::vector<double>& radii, const std::vector<double>& masses,
                        int n) {
    if (radii.size() != masses.size() || radii.size() < 3)
        throw std::invalid_argument("extrapolate_mass: need >= 3 matching samples");

    bool geometric = true;
    const double ratio = radii[1] / radii[0];
    for (size_t i = 1; i + 1 < radii.size(); ++i)
        geometric = geometric && std::fabs(radii[i + 1] / radii[i] - ratio) < 1e-9 * ratio;

    if (geometric) {
        // m(r) = L + C r^{n-6} + D r^{n-8} + ...; on geometric radii the two
        // modes are geometric sequences with known ratios.
        const double q1 = std::pow(ratio, n - 6.0);
        const double q2 = std::pow(ratio, n - 8.0);
        std::vector<double> u;
        for (size_t k = 0; k + 1 < masses.size(); ++k)
            u.push_back((masses[k + 1] - q1 * masses[k]) / (1.0 - q1));
        std::vector<double> v;
        for (size_t k = 0; k + 1 < u.size(); ++k)
            v.push_back((u[k + 1] - q2 * u[k]) / (1.0 - q2));
        return v.back();
    }

    const size_t k = masses.size();
    const double m1 = masses[k - 3], m2 = masses[k - 2], m3 = masses[k - 1];
    const double denom = m1 - 2.0 * m2 + m3;
    return std::fabs(denom) > 1e-300 ? (m3 * m1 - m2 * m2) / denom : m3;
}

}  // namespace sphgreen
