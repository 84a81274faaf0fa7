// Command-line front end: every verification as a subcommand with
// JSON/CSV/pretty output and CI-stable exit codes.
//   0  all checks passed
//   1  at least one residual check failed
//   2  usage or validation error (kernel obstruction, bad sigma, bad input)
//   3  numerical non-convergence

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <random>

#include "sphgreen/asymptotic_mass.hpp"
#include "sphgreen/axial_operator.hpp"
#include "sphgreen/errors.hpp"
#include "sphgreen/geodesic.hpp"
#include "sphgreen/gjms_spectrum.hpp"
#include "sphgreen/green_sphere.hpp"
#include "sphgreen/hypersurface.hpp"
#include "sphgreen/scalar_kernel.hpp"
#include "sphgreen/series_rigidity.hpp"

using namespace sphgreen;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string format = "pretty";
    unsigned seed = 12345;
    int threads = 1;
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string params_string(const ResidualReport& r) {
    std::string s;
    for (const auto& [k, v] : r.params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

void sort_reports(std::vector<ResidualReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const ResidualReport& a, const ResidualReport& b) {
                         if (a.name != b.name) return a.name < b.name;
                         return params_string(a) < params_string(b);
                     });
}

void emit(const std::string& command, std::vector<ResidualReport> reports,
          const RunConfig& cfg) {
    sort_reports(reports);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    if (cfg.format == "json") {
        json out;
        out["schema"] = "spherical-green/1";
        out["command"] = command;
        out["pass"] = all_pass;
        out["reports"] = json::array();
        for (const auto& r : reports) {
            json jr;
            jr["name"] = r.name;
            jr["value"] = fmt_double(r.value);
            if (r.exact) jr["rational"] = *r.exact;
            jr["target"] = fmt_double(r.target);
            jr["tolerance"] = fmt_double(r.tolerance);
            jr["pass"] = r.pass;
            json jp = json::object();
            for (const auto& [k, v] : r.params) jp[k] = v;
            jr["params"] = jp;
            out["reports"].push_back(jr);
        }
        std::cout << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "name,value,target,pass,params\n";
        for (const auto& r : reports)
            std::cout << r.name << "," << fmt_double(r.value) << "," << fmt_double(r.target)
                      << "," << (r.pass ? "true" : "false") << ",\"" << params_string(r)
                      << "\"\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
            if (r.exact)
                std::cout << "  " << *r.exact << " (exact)";
            else
                std::cout << "  value=" << fmt_double(r.value)
                          << " target=" << fmt_double(r.target)
                          << " tol=" << fmt_double(r.tolerance);
            const std::string p = params_string(r);
            if (!p.empty()) std::cout << "  (" << p << ")";
            std::cout << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    if (!all_pass) std::exit(1);
}

OperatorOrder order_from_flags(int k, double sigma, bool critical) {
    const int given = (k > 0 ? 1 : 0) + (sigma > 0 ? 1 : 0) + (critical ? 1 : 0);
    if (given != 1)
        throw CLI::ValidationError("order", "give exactly one of --critical, --k, --sigma");
    if (critical) return OperatorOrder::critical();
    if (k > 0) return OperatorOrder::integer(k);
    return OperatorOrder::fractional(sigma);
}

GraphSurface load_surface(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open surface file '" + path + "'");
    json j;
    in >> j;
    return GraphSurface::from_json(j);
}

// Deterministic sampling grid inside the chart: seeded directions x radial shells.
std::vector<Eigen::VectorXd> surface_grid(const GraphSurface& s, int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = s.dim();
    const int dirs = std::max(4, count / 10);
    std::vector<Eigen::VectorXd> out;
    const double rmax = 0.5 * std::min(s.chart_radius(), 1.0);
    std::vector<Eigen::VectorXd> basis;
    for (int d = 0; d < dirs; ++d) {
        Eigen::VectorXd v(n);
        do
            for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        while (v.norm() < 1e-3);
        basis.push_back(v.normalized());
    }
    int shell = 0;
    while (static_cast<int>(out.size()) < count) {
        const double frac = 0.1 + 0.9 * (shell % 10) / 9.0;
        out.push_back(frac * rmax * basis[static_cast<size_t>(shell) % basis.size()]);
        ++shell;
    }
    return out;
}

std::vector<ResidualReport> cmd_constants(int n, const OperatorOrder& order,
                                          double guard_tol) {
    if (order.kind == OperatorOrder::Kind::Fractional)
        validate_sigma_for_green(n, order.sigma, guard_tol);
    GreenSpec spec(n, order);
    double primary, alt;
    if (spec.critical()) {
        primary = const_critical(n);
        alt = 2.0 / (gamma_real(static_cast<double>(n)) * sphere_volume(n));
    } else {
        const double sigma = spec.sigma();
        primary = const_power(n, sigma);
        alt = gamma_real(0.5 * n - sigma) /
              (std::pow(2.0, 2.0 * sigma) * std::pow(M_PI, 0.5 * n) * gamma_real(sigma));
    }
    auto rep = ResidualReport::numeric(
        "green.constant_agreement", primary - alt, 0.0,
        1e-13 * std::max(1.0, std::fabs(primary)),
        {{"n", std::to_string(n)},
         {"order", order.str()},
         {"constant", fmt_double(primary)},
         {"alt_form", fmt_double(alt)}});
    return {rep};
}

std::vector<ResidualReport> cmd_green_verify(int n, const OperatorOrder& order, int kmax,
                                             const std::vector<double>& xs, long terms,
                                             double tol, double guard_tol,
                                             const std::string& accel) {
    if (order.kind == OperatorOrder::Kind::Fractional)
        validate_sigma_for_green(n, order.sigma, guard_tol);
    GreenSpec spec(n, order);
    std::vector<ResidualReport> reports;

    const int k0 = spec.critical() ? 1 : 0;
    for (int k = k0; k <= kmax; ++k) {
        reports.push_back(coefficient_match(spec, k));
        const double closed = spec.critical() ? moment_closed_log(n, k)
                                              : moment_closed_pow(n, spec.sigma(), k);
        const double quad = spec.critical() ? moment_quad_log(n, k)
                                            : moment_quad_pow(n, spec.sigma(), k);
        reports.push_back(ResidualReport::numeric(
            "green.moment_quadrature", closed - quad, 0.0,
            1e-10 * std::max(1.0, std::fabs(closed)),
            {{"n", std::to_string(n)}, {"order", order.str()}, {"k", std::to_string(k)}}));
    }

    SeriesConfig cfg;
    cfg.max_terms = terms;
    cfg.target_tol = tol;
    if (accel == "none") cfg.accel = SeriesConfig::Accel::None;
    else if (accel == "euler") cfg.accel = SeriesConfig::Accel::EulerTransform;
    else if (accel != "cesaro") throw std::invalid_argument("unknown acceleration '" + accel + "'");
    std::vector<SeriesResult> at_x;
    for (double x : xs) at_x.push_back(series_partial(spec, x, cfg));
    if (spec.critical()) {
        for (size_t i = 0; i < xs.size(); ++i)
            if (at_x[i].diverged)
                throw ConvergenceError("series diverged at x = " + fmt_double(xs[i]));
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j) {
                const double diff = at_x[i].value - at_x[j].value;
                const double want = -0.5 * const_critical(n) *
                                    (std::log1p(xs[i]) - std::log1p(xs[j]));
                reports.push_back(ResidualReport::numeric(
                    "green.series_difference", diff - want, 0.0, tol,
                    {{"n", std::to_string(n)},
                     {"x1", fmt_double(xs[i])},
                     {"x2", fmt_double(xs[j])},
                     {"K", std::to_string(terms)}}));
            }
    } else {
        for (size_t i = 0; i < xs.size(); ++i) {
            if (at_x[i].diverged)
                throw ConvergenceError("series diverged at x = " + fmt_double(xs[i]));
            const double closed = green_closed(spec, std::sqrt(chord_sq_from_inner(xs[i])));
            reports.push_back(ResidualReport::numeric(
                "green.series_vs_closed", at_x[i].value - closed, 0.0, tol,
                {{"n", std::to_string(n)},
                 {"order", order.str()},
                 {"x", fmt_double(xs[i])},
                 {"K", std::to_string(terms)},
                 {"error_estimate", fmt_double(at_x[i].error_estimate)}}));
        }
    }
    return reports;
}

std::vector<ResidualReport> cmd_axial(int n, int kmax) {
    std::vector<ResidualReport> reports;
    for (int k = 0; k <= kmax; ++k)
        for (int l = k + 1; l <= kmax; ++l) {
            const Rational v = verify_orthogonality(n, k, l);
            reports.push_back(ResidualReport::exact_match(
                "axial.orthogonality", v == Rational(0), v.str(),
                {{"n", std::to_string(n)},
                 {"k", std::to_string(k)},
                 {"l", std::to_string(l)}}));
        }
    for (int k = 1; k <= kmax; ++k) {
        auto c = verify_eigenvalue(n, k);
        reports.push_back(ResidualReport::exact_valued(
            "axial.eigenvalue", c.computed == c.expected, c.computed.str(),
            c.computed.to_double(), c.expected.to_double(),
            {{"n", std::to_string(n)}, {"k", std::to_string(k)}}));
        Poly uk = u_k_family(n, k);
        const bool eigen_poly = axial_Pn(uk, n) == uk.scaled(c.expected.abs());
        reports.push_back(ResidualReport::exact_match(
            "axial.eigen_identity", eigen_poly, eigen_poly ? "0" : "nonzero",
            {{"n", std::to_string(n)}, {"k", std::to_string(k)}}));
    }
    return reports;
}

std::vector<ResidualReport> cmd_flat_identity(int n) {
    RationalFn res = flat_radial_identity(n);
    return {ResidualReport::exact_match("axial.flat_radial_identity", res.is_zero(),
                                        res.is_zero() ? "0" : res.str(),
                                        {{"n", std::to_string(n)}})};
}

void append_identity_suite(const GraphSurface& s, const std::vector<Eigen::VectorXd>& grid,
                           std::vector<ResidualReport>& reports) {
    double max1 = 0, max2 = 0, maxfd = 0, maxginv = 0, maxgauss = 0;
    for (const auto& x : grid) {
        auto [r1, r2] = identity_residuals(s, x);
        max1 = std::max(max1, std::fabs(r1.value));
        max2 = std::max(max2, std::fabs(r2.value));
        for (auto& [key, v] : r2.params)
            if (key == "lap_fd_residual") maxfd = std::max(maxfd, std::fabs(std::stod(v)));
        auto c = curvature_at(s, x);
        maxginv = std::max(maxginv,
                           (c.g * c.g_inv - Eigen::MatrixXd::Identity(s.dim(), s.dim()))
                               .lpNorm<Eigen::Infinity>());
        maxgauss = std::max(maxgauss,
                            std::fabs(c.scalar - (c.H * c.H - c.second_form_norm_sq)));
    }
    auto add = [&](const char* name, double v, double tol) {
        reports.push_back(ResidualReport::numeric(
            name, v, 0.0, tol,
            {{"surface", s.id()}, {"grid", std::to_string(grid.size())}}));
    };
    add("surface.grad_rho_identity_max", max1, 1e-10);
    add("surface.lap_rho_identity_max", max2, 1e-10);
    add("surface.lap_rho_fd_max", maxfd, 1e-8);
    add("surface.metric_inverse_max", maxginv, 1e-12);
    add("surface.gauss_equation_max", maxgauss, 1e-10);
}

void append_green_suite(const GraphSurface& s, const std::vector<Eigen::VectorXd>& grid,
                        std::vector<ResidualReport>& reports) {
    if (s.dim() == 2) {
        // estimate the additive constant, then report the flattened residual
        double mean = 0;
        std::vector<double> vals;
        for (const auto& x : grid) {
            vals.push_back(green_residual_surface(s, x, 0.0));
            mean += vals.back();
        }
        mean /= static_cast<double>(vals.size());
        double spread = 0;
        for (double v : vals) spread = std::max(spread, std::fabs(v - mean));
        reports.push_back(ResidualReport::numeric(
            "surface.green_residual_spread", spread, 0.0, 1e-10,
            {{"surface", s.id()},
             {"grid", std::to_string(grid.size())},
             {"c_best", fmt_double(-mean)}}));
    } else {
        double maxr = 0;
        for (const auto& x : grid)
            maxr = std::max(maxr, std::fabs(green_residual_conformal(s, x)));
        reports.push_back(ResidualReport::numeric(
            "surface.green_residual_conformal_max", maxr, 0.0, 1e-10,
            {{"surface", s.id()}, {"grid", std::to_string(grid.size())}}));
    }
}

void append_limits_suite(const GraphSurface& s, unsigned seed,
                         std::vector<ResidualReport>& reports) {
    const int n = s.dim();
    std::vector<Eigen::VectorXd> dirs;
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e[i] = 1.0;
        dirs.push_back(e);
    }
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (dirs.size() < 5u + static_cast<size_t>(n)) {
        Eigen::VectorXd v(n);
        for (int i = 0; i < n; ++i) v[i] = gauss(rng);
        if (v.norm() > 1e-3) dirs.push_back(v.normalized());
    }
    double worst = 0;
    bool all_converged = true;
    for (const auto& v : dirs) {
        auto rl = ray_limits(s, v);
        all_converged = all_converged && rl.converged;
        for (size_t q = 0; q < 3; ++q)
            worst = std::max(worst, std::fabs(rl.computed[q] - rl.target[q]));
    }
    if (!all_converged) throw ConvergenceError("ray limit extrapolation failed");
    reports.push_back(ResidualReport::numeric(
        "surface.ray_limits_max", worst, 0.0, 1e-6,
        {{"surface", s.id()}, {"directions", std::to_string(dirs.size())}}));
}

std::vector<ResidualReport> cmd_surface(const GraphSurface& s, const std::string& suite,
                                        int grid_count, unsigned seed) {
    if (suite != "identities" && suite != "green" && suite != "limits" && suite != "all")
        throw std::invalid_argument("unknown suite '" + suite + "'");
    auto grid = surface_grid(s, grid_count, seed);
    std::vector<ResidualReport> reports;
    if (suite == "identities" || suite == "all") append_identity_suite(s, grid, reports);
    if (suite == "green" || suite == "all") append_green_suite(s, grid, reports);
    if (suite == "limits" || suite == "all") append_limits_suite(s, seed, reports);
    return reports;
}

std::vector<ResidualReport> cmd_mass(const GraphSurface& s, std::vector<double> radii,
                                     int order, int threads) {
    if (radii.empty()) throw std::invalid_argument("mass: need at least one radius");
    std::sort(radii.begin(), radii.end());
    std::vector<ResidualReport> reports;

    // the decay prediction assumes an umbilic base point
    const SurfaceJet j0 = s.jet(Eigen::VectorXd::Zero(s.dim()), 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j0.hess);
    const double kmin = es.eigenvalues().minCoeff(), kmax = es.eigenvalues().maxCoeff();
    const bool umbilic = (kmax - kmin) <= 1e-10 * std::max(1.0, std::fabs(kmax));

    std::vector<double> masses(radii.size());
    const int pool = std::max(1, std::min<int>(threads, static_cast<int>(radii.size())));
    if (pool > 1) {
        std::vector<std::future<double>> jobs;
        jobs.reserve(radii.size());
        for (double r : radii)
            jobs.push_back(std::async(std::launch::async,
                                      [&s, order, r] { return mass_estimate(s, r, order); }));
        for (size_t i = 0; i < jobs.size(); ++i) masses[i] = jobs[i].get();
    } else {
        for (size_t i = 0; i < radii.size(); ++i)
            masses[i] = mass_estimate(s, radii[i], order);
    }

    for (size_t i = 0; i < radii.size(); ++i)
        reports.push_back(ResidualReport::numeric(
            "mass.estimate", masses[i], 0.0, std::numeric_limits<double>::infinity(),
            {{"surface", s.id()},
             {"r", fmt_double(radii[i])},
             {"quad_order", std::to_string(order)}}));

    bool all_floor = true;
    for (double m : masses) all_floor = all_floor && std::fabs(m) < 1e-12;
    if (all_floor) {
        reports.push_back(
            ResidualReport::exact_match("mass.exact_zero", true, "0", {{"surface", s.id()}}));
        return reports;
    }

    if (radii.size() >= 3) {
        const double exponent = decay_slope(radii, masses);
        const double extrapolated = extrapolate_mass(radii, masses, s.dim());

        if (umbilic) {
            reports.push_back(ResidualReport::numeric(
                "mass.decay_exponent", exponent, s.dim() - 6.0, 0.3,
                {{"surface", s.id()}, {"quad_order", std::to_string(order)}}));
            reports.push_back(ResidualReport::numeric("mass.extrapolated", extrapolated, 0.0,
                                                      1e-4, {{"surface", s.id()}}));
        } else {
            reports.push_back(ResidualReport::numeric(
                "mass.decay_exponent", exponent, exponent, 0.0,
                {{"surface", s.id()}, {"note", "no prediction (base point not umbilic)"}}));
        }
    }
    return reports;
}

std::vector<ResidualReport> cmd_geodesic(const GraphSurface& s,
                                         const std::vector<double>& vcomp, double r_max,
                                         int samples, const std::string& trace_path) {
    Eigen::VectorXd v(static_cast<long>(vcomp.size()));
    for (size_t i = 0; i < vcomp.size(); ++i) v[static_cast<long>(i)] = vcomp[i];
    auto trace = geodesic_shoot(s, v, r_max, samples);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        out << "r,rho\n";
        for (const auto& g : trace)
            out << fmt_double(g.r) << "," << fmt_double(g.rho) << "\n";
    }
    std::vector<ResidualReport> reports;
    reports.push_back(chord_expansion_check(s, v));
    // chords never exceed arclength
    double worst = 0.0;
    for (const auto& g : trace) worst = std::max(worst, g.rho - g.r * g.r);
    reports.push_back(ResidualReport::numeric("geodesic.chord_bound", std::max(worst, 0.0),
                                              0.0, 1e-10, {{"surface", s.id()}}));
    return reports;
}

std::vector<ResidualReport> cmd_series_rigidity(const std::string& c0_str, int N) {
    const Rational c0 = Rational::from_string(c0_str);
    auto sol = series_rigidity_solve(c0, N);
    auto oracle = sphere_series_oracle(c0, N);
    const bool fold = sol.rational();
    std::vector<Rational> folded;
    if (fold) folded = sol.as_rationals();
    const double root = std::sqrt(c0.to_double());
    std::vector<ResidualReport> reports;
    for (int m = 0; m < N; ++m) {
        const auto& a = sol.coeffs[static_cast<size_t>(m)];
        const auto& o = oracle[static_cast<size_t>(m)];
        reports.push_back(ResidualReport::exact_valued(
            "rigidity.coefficient", a.p == o.p && a.q == o.q,
            fold ? folded[static_cast<size_t>(m)].str() : a.str(),
            a.p.to_double() + a.q.to_double() * root,
            o.p.to_double() + o.q.to_double() * root,
            {{"c0", c0.str()}, {"m", std::to_string(m + 1)}}));
    }
    bool residual_zero = true;
    for (const auto& r : series_rigidity_residual(sol)) residual_zero = residual_zero && r.is_zero();
    reports.push_back(ResidualReport::exact_match(
        "rigidity.back_substitution", residual_zero, residual_zero ? "0" : "nonzero",
        {{"c0", c0.str()}, {"N", std::to_string(N)}}));
    return reports;
}

int threads_from_env() {
    const char* env = std::getenv("SPHERICAL_GREEN_THREADS");
    if (!env) return 1;
    const int t = std::atoi(env);
    return t >= 1 ? t : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for Green functions of conformally covariant "
                 "operators on spheres and graph hypersurfaces"};
    app.require_subcommand(1);
    app.fallthrough();  // --format/--seed may follow the subcommand

    RunConfig cfg;
    cfg.threads = threads_from_env();
    app.add_option("--format", cfg.format, "output format: json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--seed", cfg.seed,
                   "seed for sampling grids (fixed seed => identical output)");

    int n = 3, k_order = 0, kmax = 12, grid = 100, samples = 4096, quad_order = 32, N = 12;
    double sigma = 0.0, tol = 1e-3, r_max = 1.0;
    bool critical = false, near_pole_guard = false;
    long terms = 50000;
    std::string surface_path, suite = "all", c0 = "1/4", trace_path;
    std::vector<double> xs = {0.0, 0.5, 1.0}, radii = {20, 40, 80}, vcomp = {1.0, 0.0};

    auto add_order_flags = [&](CLI::App* sub) {
        sub->add_option("--n", n, "sphere dimension")->required();
        sub->add_flag("--critical", critical, "critical order 2*gamma = n");
        sub->add_option("--k", k_order, "integer order k (operator order 2k)");
        sub->add_option("--sigma", sigma, "fractional order sigma");
        sub->add_flag("--near-pole-guard", near_pole_guard,
                      "reject sigma within 1e-3 of n/2 + m instead of the default 1e-9");
    };

    auto* c_constants =
        app.add_subcommand("constants", "Green-function constants, both closed forms");
    add_order_flags(c_constants);

    auto* c_verify = app.add_subcommand(
        "green-verify", "coefficient matching and series-vs-closed-form checks");
    add_order_flags(c_verify);
    c_verify->add_option("--kmax", kmax, "largest Gegenbauer degree");
    c_verify->add_option("--x", xs, "evaluation points x = -P.Q")->delimiter(',');
    c_verify->add_option("--terms", terms, "series length K");
    c_verify->add_option("--tol", tol, "series tolerance");
    std::string accel = "cesaro";
    c_verify->add_option("--accel", accel, "series acceleration: cesaro, euler, or none")
        ->check(CLI::IsMember({"cesaro", "euler", "none"}));

    auto* c_axial = app.add_subcommand("axial", "exact axial-operator identities (n even)");
    c_axial->add_option("--n", n)->required();
    c_axial->add_option("--kmax", kmax);

    auto* c_flat = app.add_subcommand("flat-identity", "exact flat radial identity (n even)");
    c_flat->add_option("--n", n)->required();

    auto* c_surface = app.add_subcommand("surface", "hypersurface residual suites");
    c_surface->add_option("file", surface_path, "surface JSON")->required();
    c_surface->add_option("--suite", suite, "identities, green, limits, or all");
    c_surface->add_option("--grid", grid, "sample count");

    auto* c_mass = app.add_subcommand("mass", "inverted-metric mass estimates and decay fit");
    c_mass->add_option("file", surface_path)->required();
    c_mass->add_option("--radii", radii, "coordinate-sphere radii")->delimiter(',');
    c_mass->add_option("--order", quad_order, "sphere quadrature order");

    auto* c_geo = app.add_subcommand("geodesic", "geodesic shooting and chord expansion");
    c_geo->add_option("file", surface_path)->required();
    c_geo->add_option("--v", vcomp, "initial direction components")->delimiter(',');
    c_geo->add_option("--r-max", r_max, "arclength horizon");
    c_geo->add_option("--samples", samples, "integration steps");
    c_geo->add_option("--trace", trace_path, "write the (r, rho) trace CSV here");

    auto* c_rig = app.add_subcommand("series-rigidity", "power-series rigidity recursion");
    c_rig->add_option("--c0", c0, "positive rational, e.g. 1/4");
    c_rig->add_option("--N", N, "number of coefficients");

    CLI11_PARSE(app, argc, argv);

    try {
        const double guard = near_pole_guard ? 1e-3 : 1e-9;
        if (c_constants->parsed())
            emit("constants",
                 cmd_constants(n, order_from_flags(k_order, sigma, critical), guard), cfg);
        else if (c_verify->parsed())
            emit("green-verify",
                 cmd_green_verify(n, order_from_flags(k_order, sigma, critical), kmax, xs,
                                  terms, tol, guard, accel),
                 cfg);
        else if (c_axial->parsed())
            emit("axial", cmd_axial(n, kmax), cfg);
        else if (c_flat->parsed())
            emit("flat-identity", cmd_flat_identity(n), cfg);
        else if (c_surface->parsed())
            emit("surface", cmd_surface(load_surface(surface_path), suite, grid, cfg.seed),
                 cfg);
        else if (c_mass->parsed())
            emit("mass",
                 cmd_mass(load_surface(surface_path), radii, quad_order, cfg.threads), cfg);
        else if (c_geo->parsed())
            emit("geodesic",
                 cmd_geodesic(load_surface(surface_path), vcomp, r_max, samples, trace_path),
                 cfg);
        else if (c_rig->parsed())
            emit("series-rigidity", cmd_series_rigidity(c0, N), cfg);
    } catch (const ConvergenceError& e) {
        json err = {{"schema", "spherical-green/1"},
                    {"error", {{"kind", "non-convergence"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        json err = {{"schema", "spherical-green/1"},
                    {"error", {{"kind", "validation"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}
