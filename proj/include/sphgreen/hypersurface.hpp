#ifndef SPHGREEN_HYPERSURFACE_HPP
#define SPHGREEN_HYPERSURFACE_HPP

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sphgreen/errors.hpp"
#include "sphgreen/report.hpp"

#include <json.hpp>

namespace sphgreen {

/// Value and derivatives of the graph function at a chart point.
struct SurfaceJet {
    double f = 0.0;
    Eigen::VectorXd grad;                  // f_a
    Eigen::MatrixXd hess;                  // f_ab
    std::vector<Eigen::MatrixXd> third;    // third[c](a,b) = f_abc
};

/// Hypersurface in R^{n+1} given as a graph over a ball, with analytic
/// derivative oracles up to order 3 and the base-point normalization
/// f(0) = 0, grad f(0) = 0 enforced at construction.
class GraphSurface {
  public:
    /// The int argument is the highest derivative order requested (1..3);
    /// oracles may leave higher slots empty.
    using Oracle = std::function<SurfaceJet(const Eigen::VectorXd&, int)>;

    GraphSurface(int n, double chart_radius, std::string id, Oracle oracle);

    int dim() const { return n_; }
    double chart_radius() const { return delta_; }
    const std::string& id() const { return id_; }
    SurfaceJet jet(const Eigen::VectorXd& x, int order = 3) const;

    static GraphSurface flat(int n);
    static GraphSurface sphere(int n, double radius);
    /// Lower cap of the ellipsoid sum (x_i/a_i)^2 + ((z-c)/c)^2 = 1.
    static GraphSurface ellipsoid(int n, std::vector<double> semi_axes, double vertical);
    /// f = sum c_i x_i^2 / 2.
    static GraphSurface paraboloid(std::vector<double> coeffs);
    /// Polynomial graph from (exponent tuple, coefficient) terms.
    static GraphSurface custom(int n,
                               std::vector<std::pair<std::vector<int>, double>> terms,
                               double chart_radius);
    static GraphSurface from_json(const nlohmann::json& j);

  private:
    int n_;
    double delta_;
    std::string id_;
    Oracle oracle_;
};

struct CurvatureData {
    Eigen::MatrixXd g, g_inv;
    Eigen::MatrixXd second_form;  // h_ab = f_ab / W
    double W = 1.0;               // sqrt(1 + |grad f|^2)
    double H = 0.0;               // tr_g(II), sum of principal curvatures
    double second_form_norm_sq = 0.0;
    double scalar = 0.0;          // R = H^2 - |II|^2
    double eta = 0.0;             // support function
    double rho = 0.0;             // squared chord to the base point
    Eigen::VectorXd grad_rho;
};

CurvatureData curvature_at(const GraphSurface& s, const Eigen::VectorXd& x);

/// Residuals of the gradient and Laplacian identities for rho, each assembled
/// from independent ingredients; the second report carries the
/// finite-difference Laplace-Beltrami cross-check in its metadata.
std::pair<ResidualReport, ResidualReport> identity_residuals(const GraphSurface& s,
                                                             const Eigen::VectorXd& x);

/// 2 eta H / rho + 4 eta^2 / rho^2 + c  (n = 2).
double green_residual_surface(const GraphSurface& s, const Eigen::VectorXd& x, double c);

/// n eta^2/rho^2 + eta H/rho + (H^2 - |II|^2)/(4(n-1))  (n >= 3).
double green_residual_conformal(const GraphSurface& s, const Eigen::VectorXd& x);

struct RayLimits {
    std::array<double, 3> computed{};  // eta/rho, grad rho . grad(f - x.grad f)/rho, |grad(f - x.grad f)|^2/rho
    std::array<double, 3> target{};    // -II(v,v)/2, -2 II(v,v), (II^2)(v,v)
    bool converged = false;
};
RayLimits ray_limits(const GraphSurface& s, Eigen::VectorXd v);

/// Principal curvatures at a point.
struct PrincipalData {
    std::vector<double> kappas;

    int n() const { return static_cast<int>(kappas.size()); }
    double H() const;
    double second_form_norm_sq() const;
    double scalar() const { return H() * H() - second_form_norm_sq(); }
    /// Ric(v,v) = H II(v,v) - (II^2)(v,v) for the principal direction.
    double ric(int direction) const;
};

/// H^2 - n |II|^2; zero exactly at umbilic points.
double umbilic_defect(const PrincipalData& pd);

/// Traced fourth-order identity, n >= 3 and n != 4.
double paneitz_trace_residual(int n, const PrincipalData& pd);

/// The n = 4 variant: -24 |II|^2 + 8 H^2 - (8/3) R.
double paneitz_trace_residual_4d(const PrincipalData& pd);

/// Per-direction identity before tracing (same domain as the traced form).
double paneitz_direction_residual(int n, const PrincipalData& pd, int direction);

/// (n-2) II(v,v)^2 - (2 Ric(v,v) - R/(n-1)), n >= 5.
double chord_coefficient_identity(int n, const PrincipalData& pd, int direction);

}  // namespace sphgreen

#endif
