#include "sphgreen/hypersurface.hpp"

#include <cmath>
#include <sstream>

namespace sphgreen {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void check_base_point(const GraphSurface::Oracle& oracle, int n) {
    SurfaceJet j0 = oracle(VectorXd::Zero(n), 1);
    if (std::fabs(j0.f) > 1e-14 || j0.grad.lpNorm<Eigen::Infinity>() > 1e-14)
        throw std::invalid_argument(
            "GraphSurface: base point must satisfy f(0)=0 and grad f(0)=0");
}

void check_symmetry(const GraphSurface::Oracle& oracle, int n, double delta) {
    // Spot-check hess symmetry and total symmetry of the third derivatives.
    for (double scale : {0.13, 0.31, 0.47}) {
        VectorXd x = VectorXd::Zero(n);
        for (int i = 0; i < n; ++i)
            x[i] = scale * delta / std::sqrt(static_cast<double>(n) * (1.0 + i));
        SurfaceJet j = oracle(x, 3);
        if ((j.hess - j.hess.transpose()).lpNorm<Eigen::Infinity>() > 1e-10)
            throw std::invalid_argument("GraphSurface: Hessian oracle is not symmetric");
        for (int c = 0; c < n; ++c)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    double t1 = j.third[static_cast<size_t>(c)](a, b);
                    double t2 = j.third[static_cast<size_t>(a)](b, c);
                    if (std::fabs(t1 - t2) > 1e-10)
                        throw std::invalid_argument(
                            "GraphSurface: third-derivative oracle is not totally symmetric");
                }
    }
}

std::vector<MatrixXd> zero_third(int n) {
    return std::vector<MatrixXd>(static_cast<size_t>(n), MatrixXd::Zero(n, n));
}

}  // namespace

GraphSurface::GraphSurface(int n, double chart_radius, std::string id, Oracle oracle)
    : n_(n), delta_(chart_radius), id_(std::move(id)), oracle_(std::move(oracle)) {
    if (n_ < 1) throw std::invalid_argument("GraphSurface: dimension must be positive");
    if (!(delta_ > 0.0)) throw std::invalid_argument("GraphSurface: chart radius must be positive");
    check_base_point(oracle_, n_);
    check_symmetry(oracle_, n_, delta_);
}

SurfaceJet GraphSurface::jet(const Eigen::VectorXd& x, int order) const {
    if (x.size() != n_)
        throw std::invalid_argument("GraphSurface::jet: point dimension mismatch");
    if (order < 1 || order > 3)
        throw std::invalid_argument("GraphSurface::jet: order must be 1..3");
    if (x.norm() >= delta_)
        throw ChartError("GraphSurface::jet: |x| = " + std::to_string(x.norm()) +
                         " outside chart radius " + std::to_string(delta_));
    return oracle_(x, order);
}

GraphSurface GraphSurface::flat(int n) {
    return GraphSurface(n, 1e6, "flat", [n](const VectorXd&, int order) {
        SurfaceJet j;
        j.f = 0.0;
        j.grad = VectorXd::Zero(n);
        if (order >= 2) j.hess = MatrixXd::Zero(n, n);
        if (order >= 3) j.third = zero_third(n);
        return j;
    });
}

GraphSurface GraphSurface::sphere(int n, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("sphere: radius must be positive");
    std::vector<double> axes(static_cast<size_t>(n), radius);
    GraphSurface s = ellipsoid(n, axes, radius);
    std::ostringstream id;
    id << "sphere(R=" << radius << ",n=" << n << ")";
    return GraphSurface(n, 0.9 * radius, id.str(),
                        [s](const VectorXd& x, int order) { return s.jet(x, order); });
}

GraphSurface GraphSurface::ellipsoid(int n, std::vector<double> semi_axes, double vertical) {
    if (static_cast<int>(semi_axes.size()) != n)
        throw std::invalid_argument("ellipsoid: need one semi-axis per coordinate");
    for (double a : semi_axes)
        if (!(a > 0.0)) throw std::invalid_argument("ellipsoid: semi-axes must be positive");
    if (!(vertical > 0.0)) throw std::invalid_argument("ellipsoid: vertical semi-axis must be positive");
    const double c = vertical;
    double amin = semi_axes[0];
    for (double a : semi_axes) amin = std::min(amin, a);
    std::vector<double> b(semi_axes.size());
    for (size_t i = 0; i < b.size(); ++i) b[i] = 1.0 / (semi_axes[i] * semi_axes[i]);

    std::ostringstream id;
    id << "ellipsoid(axes=";
    for (size_t i = 0; i < semi_axes.size(); ++i) id << (i ? "," : "") << semi_axes[i];
    id << ";c=" << c << ")";

    auto oracle = [n, b, c](const VectorXd& x, int order) {
        double q = 0.0;
        for (int i = 0; i < n; ++i) q += b[static_cast<size_t>(i)] * x[i] * x[i];
        const double s = std::sqrt(1.0 - q);
        const double w = 1.0 / s, w3 = w * w * w, w5 = w3 * w * w;
        SurfaceJet j;
        j.f = c * q / (1.0 + s);  // c(1 - sqrt(1-q)) without cancellation
        j.grad = VectorXd(n);
        for (int a = 0; a < n; ++a) j.grad[a] = c * b[static_cast<size_t>(a)] * x[a] * w;
        if (order < 2) return j;
        j.hess = MatrixXd(n, n);
        for (int a = 0; a < n; ++a)
            for (int d = 0; d < n; ++d) {
                double v = c * b[static_cast<size_t>(a)] * b[static_cast<size_t>(d)] *
                           x[a] * x[d] * w3;
                if (a == d) v += c * b[static_cast<size_t>(a)] * w;
                j.hess(a, d) = v;
            }
        if (order < 3) return j;
        j.third = zero_third(n);
        for (int g = 0; g < n; ++g) {
            const double bg = b[static_cast<size_t>(g)];
            for (int a = 0; a < n; ++a) {
                const double ba = b[static_cast<size_t>(a)];
                for (int d = 0; d < n; ++d) {
                    const double bd = b[static_cast<size_t>(d)];
                    double v = 3.0 * c * ba * bd * bg * x[a] * x[d] * x[g] * w5;
                    if (a == d) v += c * ba * bg * x[g] * w3;
                    if (a == g) v += c * ba * bd * x[d] * w3;
                    if (d == g) v += c * ba * bd * x[a] * w3;
                    j.third[static_cast<size_t>(g)](a, d) = v;
                }
            }
        }
        return j;
    };
    return GraphSurface(n, 0.9 * amin, id.str(), oracle);
}

GraphSurface GraphSurface::paraboloid(std::vector<double> coeffs) {
    const int n = static_cast<int>(coeffs.size());
    std::ostringstream id;
    id << "paraboloid(";
    for (size_t i = 0; i < coeffs.size(); ++i) id << (i ? "," : "") << coeffs[i];
    id << ")";
    auto oracle = [n, coeffs](const VectorXd& x, int order) {
        SurfaceJet j;
        j.grad = VectorXd(n);
        j.f = 0.0;
        if (order >= 2) j.hess = MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            j.f += 0.5 * coeffs[static_cast<size_t>(i)] * x[i] * x[i];
            j.grad[i] = coeffs[static_cast<size_t>(i)] * x[i];
            if (order >= 2) j.hess(i, i) = coeffs[static_cast<size_t>(i)];
        }
        if (order >= 3) j.third = zero_third(n);
        return j;
    };
    return GraphSurface(n, 1e6, id.str(), oracle);
}

GraphSurface GraphSurface::custom(int n,
                                  std::vector<std::pair<std::vector<int>, double>> terms,
                                  double chart_radius) {
    for (auto& [exps, coeff] : terms) {
        (void)coeff;
        if (static_cast<int>(exps.size()) != n)
            throw std::invalid_argument("custom surface: exponent tuple length mismatch");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("custom surface: negative exponent");
    }
    auto eval_term = [](const std::vector<int>& exps, const VectorXd& x,
                        const std::vector<int>& lowered) {
        // product of x_i^{e_i - lowered_i} times the falling-factorial prefactor
        double v = 1.0;
        for (size_t i = 0; i < exps.size(); ++i) {
            int e = exps[i] - lowered[i];
            if (e < 0) return 0.0;
            for (int d = 0; d < lowered[i]; ++d) v *= (exps[i] - d);
            for (int d = 0; d < e; ++d) v *= x[static_cast<long>(i)];
        }
        return v;
    };
    auto oracle = [n, terms, eval_term](const VectorXd& x, int order) {
        SurfaceJet j;
        j.grad = VectorXd::Zero(n);
        if (order >= 2) j.hess = MatrixXd::Zero(n, n);
        if (order >= 3) j.third = zero_third(n);
        j.f = 0.0;
        std::vector<int> low(static_cast<size_t>(n), 0);
        for (const auto& [exps, coeff] : terms) {
            j.f += coeff * eval_term(exps, x, low);
            for (int a = 0; a < n; ++a) {
                auto la = low;
                la[static_cast<size_t>(a)] += 1;
                j.grad[a] += coeff * eval_term(exps, x, la);
                if (order < 2) continue;
                for (int b = a; b < n; ++b) {
                    auto lab = la;
                    lab[static_cast<size_t>(b)] += 1;
                    const double hv = coeff * eval_term(exps, x, lab);
                    j.hess(a, b) += hv;
                    if (a != b) j.hess(b, a) += hv;
                    if (order < 3) continue;
                    for (int g = 0; g < n; ++g) {
                        auto labg = lab;
                        labg[static_cast<size_t>(g)] += 1;
                        const double tv = coeff * eval_term(exps, x, labg);
                        j.third[static_cast<size_t>(g)](a, b) += tv;
                        if (a != b) j.third[static_cast<size_t>(g)](b, a) += tv;
                    }
                }
            }
        }
        return j;
    };
    return GraphSurface(n, chart_radius, "custom", oracle);
}

GraphSurface GraphSurface::from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.at("dim").get<int>();
    const auto& p = j.contains("params") ? j.at("params") : nlohmann::json::object();
    if (kind == "sphere") return sphere(n, p.at("radius").get<double>());
    if (kind == "ellipsoid")
        return ellipsoid(n, p.at("semi_axes").get<std::vector<double>>(),
                         p.at("vertical").get<double>());
    if (kind == "paraboloid") {
        auto coeffs = p.at("coeffs").get<std::vector<double>>();
        if (static_cast<int>(coeffs.size()) != n)
            throw std::invalid_argument("paraboloid: coeffs length must equal dim");
        return paraboloid(coeffs);
    }
    if (kind == "flat") return flat(n);
    if (kind == "custom") {
        std::vector<std::pair<std::vector<int>, double>> terms;
        for (const auto& t : p.at("terms"))
            terms.emplace_back(t.at("exponents").get<std::vector<int>>(),
                               t.at("coeff").get<double>());
        const double delta = p.contains("chart_radius") ? p.at("chart_radius").get<double>() : 1.0;
        return custom(n, terms, delta);
    }
    throw std::invalid_argument("surface JSON: unknown kind '" + kind + "'");
}

CurvatureData curvature_at(const GraphSurface& s, const Eigen::VectorXd& x) {
    const SurfaceJet j = s.jet(x, 2);
    const int n = s.dim();
    CurvatureData c;
    const double grad_sq = j.grad.squaredNorm();
    c.W = std::sqrt(1.0 + grad_sq);
    c.g = MatrixXd::Identity(n, n) + j.grad * j.grad.transpose();
    c.g_inv = MatrixXd::Identity(n, n) - (j.grad * j.grad.transpose()) / (1.0 + grad_sq);
    c.second_form = j.hess / c.W;
    const MatrixXd shape = c.g_inv * c.second_form;
    c.H = shape.trace();
    c.second_form_norm_sq = (shape * shape).trace();
    c.scalar = c.H * c.H - c.second_form_norm_sq;
    c.eta = (j.f - x.dot(j.grad)) / c.W;
    c.rho = x.squaredNorm() + j.f * j.f;
    c.grad_rho = 2.0 * x + 2.0 * j.f * j.grad;
    return c;
}

std::pair<ResidualReport, ResidualReport> identity_residuals(const GraphSurface& s,
                                                             const Eigen::VectorXd& x) {
    const SurfaceJet j = s.jet(x, 2);
    const CurvatureData c = curvature_at(s, x);
    const int n = s.dim();

    const double grad_identity =
        c.grad_rho.dot(c.g_inv * c.grad_rho) - (4.0 * c.rho - 4.0 * c.eta * c.eta);

    // Covariant Hessian of rho contracted with g^{-1}:
    // rho_{,ab} = d2 rho - Gamma^m_ab d_m rho, Gamma^m_ab = f_ab f_m / W^2.
    MatrixXd d2rho = 2.0 * MatrixXd::Identity(n, n) +
                     2.0 * j.grad * j.grad.transpose() + 2.0 * j.f * j.hess;
    const double gf = j.grad.dot(c.grad_rho) / (c.W * c.W);
    MatrixXd cov_hess = d2rho - j.hess * gf;
    const double lap_rho = (c.g_inv * cov_hess).trace();
    const double lap_identity = lap_rho - (2.0 * n + 2.0 * c.eta * c.H);

    // Independent finite-difference Laplace-Beltrami:
    // (1/sqrt G) d_a ( sqrt G g^{ab} d_b rho ), outer derivative differenced.
    auto flux = [&](const Eigen::VectorXd& y, int a) {
        const SurfaceJet jy = s.jet(y, 1);
        const double gs = jy.grad.squaredNorm();
        const Eigen::VectorXd grad_rho_y = 2.0 * y + 2.0 * jy.f * jy.grad;
        // det g = W^2, g^{-1} grad = grad - grad (g.grad_rho)/(1+|g|^2)
        const Eigen::VectorXd up =
            grad_rho_y - jy.grad * (jy.grad.dot(grad_rho_y) / (1.0 + gs));
        return std::sqrt(1.0 + gs) * up[a];
    };
    const double h = 1e-5 * std::max(1.0, x.norm());
    double div = 0.0;
    for (int a = 0; a < n; ++a) {
        Eigen::VectorXd xp = x, xm = x;
        xp[a] += h;
        xm[a] -= h;
        div += (flux(xp, a) - flux(xm, a)) / (2.0 * h);
    }
    const double lap_fd = div / c.W;
    const double lap_fd_identity = lap_fd - (2.0 * n + 2.0 * c.eta * c.H);

    std::vector<std::pair<std::string, std::string>> params = {
        {"surface", s.id()}, {"x_norm", std::to_string(x.norm())}};
    auto r1 = ResidualReport::numeric("surface.grad_rho_identity", grad_identity, 0.0, 1e-10,
                                      params);
    params.emplace_back("lap_fd_residual", std::to_string(lap_fd_identity));
    auto r2 = ResidualReport::numeric("surface.lap_rho_identity", lap_identity, 0.0, 1e-10,
                                      params);
    return {r1, r2};
}

double green_residual_surface(const GraphSurface& s, const Eigen::VectorXd& x, double c) {
    if (s.dim() != 2)
        throw std::invalid_argument("green_residual_surface: surface dimension must be 2");
    if (x.norm() == 0.0) throw std::domain_error("green_residual_surface: singular at x = 0");
    const CurvatureData cd = curvature_at(s, x);
    return 2.0 * cd.eta * cd.H / cd.rho + 4.0 * cd.eta * cd.eta / (cd.rho * cd.rho) + c;
}

double green_residual_conformal(const GraphSurface& s, const Eigen::VectorXd& x) {
    const int n = s.dim();
    if (n < 3) throw std::invalid_argument("green_residual_conformal: needs n >= 3");
    if (x.norm() == 0.0) throw std::domain_error("green_residual_conformal: singular at x = 0");
    const CurvatureData cd = curvature_at(s, x);
    return n * cd.eta * cd.eta / (cd.rho * cd.rho) + cd.eta * cd.H / cd.rho +
           cd.scalar / (4.0 * (n - 1.0));
}

namespace {

// Neville extrapolation to t = 0 of samples (t_i, y_i) with t halving.
double richardson(const std::vector<double>& ts, std::vector<double> y) {
    const size_t m = ts.size();
    for (size_t level = 1; level < m; ++level)
        for (size_t i = 0; i + level < m; ++i)
            y[i] = (ts[i] * y[i + 1] - ts[i + level] * y[i]) / (ts[i] - ts[i + level]);
    return y[0];
}

}  // namespace

RayLimits ray_limits(const GraphSurface& s, Eigen::VectorXd v) {
    const int n = s.dim();
    if (v.size() != n) throw std::invalid_argument("ray_limits: direction dimension mismatch");
    const double vn = v.norm();
    if (!(vn > 0.0)) throw std::invalid_argument("ray_limits: zero direction");
    v /= vn;

    const SurfaceJet j0 = s.jet(Eigen::VectorXd::Zero(n), 2);
    const double ii_vv = v.dot(j0.hess * v);
    const double ii2_vv = (j0.hess * v).squaredNorm();

    RayLimits out;
    out.target = {-0.5 * ii_vv, -2.0 * ii_vv, ii2_vv};

    std::vector<double> ts;
    std::vector<std::array<double, 3>> samples;
    double t = 1e-2;
    for (int i = 0; i < 5; ++i, t *= 0.5) {
        const Eigen::VectorXd x = t * v;
        const SurfaceJet j = s.jet(x, 2);
        const CurvatureData c = curvature_at(s, x);
        const Eigen::VectorXd grad_eta_raw = -(j.hess * x);  // d_a(f - x.grad f)
        const double l1 = c.eta / c.rho;
        const double l2 = c.grad_rho.dot(c.g_inv * grad_eta_raw) / c.rho;
        const double l3 = grad_eta_raw.dot(c.g_inv * grad_eta_raw) / c.rho;
        ts.push_back(t);
        samples.push_back({l1, l2, l3});
    }
    for (int q = 0; q < 3; ++q) {
        std::vector<double> col;
        for (auto& sm : samples) col.push_back(sm[static_cast<size_t>(q)]);
        out.computed[static_cast<size_t>(q)] = richardson(ts, col);
    }
    out.converged = true;
    for (int q = 0; q < 3; ++q)
        if (!std::isfinite(out.computed[static_cast<size_t>(q)])) out.converged = false;
    return out;
}

double PrincipalData::H() const {
    double h = 0.0;
    for (double k : kappas) h += k;
    return h;
}

double PrincipalData::second_form_norm_sq() const {
    double s = 0.0;
    for (double k : kappas) s += k * k;
    return s;
}

double PrincipalData::ric(int direction) const {
    if (direction < 0 || direction >= n())
        throw std::invalid_argument("PrincipalData::ric: bad direction index");
    const double k = kappas[static_cast<size_t>(direction)];
    return H() * k - k * k;
}

double umbilic_defect(const PrincipalData& pd) {
    return pd.H() * pd.H() - pd.n() * pd.second_form_norm_sq();
}

double paneitz_trace_residual(int n, const PrincipalData& pd) {
    if (n != pd.n()) throw std::invalid_argument("paneitz_trace_residual: dimension mismatch");
    if (n < 3 || n == 4)
        throw std::invalid_argument("paneitz_trace_residual: needs n >= 3, n != 4 (use the 4d variant)");
    const double H = pd.H(), ii2 = pd.second_form_norm_sq(), R = pd.scalar();
    return 2.0 * (n - 1.0) * ii2 - (3.0 * n - 8.0) / (n - 2.0) * H * H +
           (n * n - 2.0 * n - 4.0) / ((n - 1.0) * (n - 2.0)) * R;
}

double paneitz_trace_residual_4d(const PrincipalData& pd) {
    if (pd.n() != 4) throw std::invalid_argument("paneitz_trace_residual_4d: needs n = 4");
    const double H = pd.H(), ii2 = pd.second_form_norm_sq(), R = pd.scalar();
    return -24.0 * ii2 + 8.0 * H * H - 8.0 * R / 3.0;
}

double paneitz_direction_residual(int n, const PrincipalData& pd, int direction) {
    if (n != pd.n()) throw std::invalid_argument("paneitz_direction_residual: dimension mismatch");
    if (n < 3 || n == 4)
        throw std::invalid_argument("paneitz_direction_residual: needs n >= 3, n != 4");
    if (direction < 0 || direction >= n)
        throw std::invalid_argument("paneitz_direction_residual: bad direction index");
    const double k = pd.kappas[static_cast<size_t>(direction)];
    const double H = pd.H(), R = pd.scalar();
    return 2.0 * n * k * k - 2.0 * k * k - 4.0 * H * k + H * H / (n - 2.0) +
           (n - 6.0) / ((n - 1.0) * (n - 2.0)) * R + 4.0 / (n - 2.0) * pd.ric(direction);
}

double chord_coefficient_identity(int n, const PrincipalData& pd, int direction) {
    if (n != pd.n()) throw std::invalid_argument("chord_coefficient_identity: dimension mismatch");
    if (n < 5) throw std::invalid_argument("chord_coefficient_identity: needs n >= 5");
    if (direction < 0 || direction >= n)
        throw std::invalid_argument("chord_coefficient_identity: bad direction index");
    const double k = pd.kappas[static_cast<size_t>(direction)];
    return (n - 2.0) * k * k - (2.0 * pd.ric(direction) - pd.scalar() / (n - 1.0));
}

}  // namespace sphgreen
