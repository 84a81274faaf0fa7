#include "sphgreen/green_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sphgreen/gegenbauer.hpp"
#include "sphgreen/scalar_kernel.hpp"

namespace sphgreen {

namespace {

constexpr double kPi = std::numbers::pi;

double half(int n) { return 0.5 * n; }

}  // namespace

GreenSpec::GreenSpec(int n_, OperatorOrder order_) : n(n_), order(order_) {
    if (n < 2) throw std::invalid_argument("GreenSpec: n must be >= 2");
    switch (order.kind) {
        case OperatorOrder::Kind::Critical:
            break;
        case OperatorOrder::Kind::Integer:
            if (2 * order.k == n)
                throw std::invalid_argument(
                    "GreenSpec: 2k = n is the critical order; use OperatorOrder::critical()");
            if (kernel_status(n, order) == KernelStatus::NontrivialKernel)
                throw KernelObstructionError(
                    "GreenSpec: 2k > n with n even: kernel contains non-constants, "
                    "Green function can not exist");
            break;
        case OperatorOrder::Kind::Fractional:
            validate_sigma_for_green(n, order.sigma);
            break;
    }
}

double const_critical(int n) {
    if (n < 2) throw std::invalid_argument("const_critical: n must be >= 2");
    if (n <= 30)
        return 1.0 / (std::pow(2.0, n - 1) * std::pow(kPi, half(n)) * gamma_real(half(n)));
    return std::exp(-((n - 1) * std::numbers::ln2 + half(n) * std::log(kPi) +
                      log_gamma(half(n))));
}

double const_power(int n, double sigma) {
    if (n < 2) throw std::invalid_argument("const_power: n must be >= 2");
    validate_sigma_for_green(n, sigma);
    auto [sg, lg] = log_gamma_signed(half(n) - sigma);
    const double log_val = lg - 2.0 * sigma * std::numbers::ln2 -
                           half(n) * std::log(kPi) - log_gamma(sigma);
    return sg * std::exp(log_val);
}

double green_closed(const GreenSpec& spec, double chord) {
    if (!(chord > 0.0))
        throw std::domain_error("green_closed: chord must be positive (coincidence point)");
    if (chord > 2.0 + 1e-12)
        throw std::domain_error("green_closed: chord exceeds the sphere diameter 2");
    if (spec.critical()) return -const_critical(spec.n) * std::log(chord);
    const double sigma = spec.sigma();
    return const_power(spec.n, sigma) * std::pow(chord, 2.0 * sigma - spec.n);
}

double chord_sq_from_inner(double x) {
    if (x < -1.0 || x > 1.0)
        throw std::domain_error("chord_sq_from_inner: x must lie in [-1,1]");
    return 2.0 * (1.0 + x);
}

namespace {

// Iterated running means; depth m tames alternating terms growing like k^{m-1}.
class CesaroStack {
  public:
    explicit CesaroStack(int levels) : cum_(static_cast<size_t>(levels), 0.0) {}
    double push(double partial_sum, long count) {
        double v = partial_sum;
        for (auto& c : cum_) {
            c += v;
            v = c / static_cast<double>(count);
        }
        return v;
    }

  private:
    std::vector<double> cum_;
};

// van Wijngaarden / Euler transformation for (near-)alternating series.
class EulerSum {
  public:
    double push(double term) {
        if (n_ == 0) {
            wksp_.push_back(term);
            sum_ = 0.5 * term;
        } else {
            double tmp = wksp_[0];
            wksp_[0] = term;
            for (size_t j = 0; j + 1 < wksp_.size(); ++j) {
                double d = 0.5 * (wksp_[j] + tmp);
                tmp = wksp_[j + 1];
                wksp_[j + 1] = d;
            }
            double next = 0.5 * (wksp_.back() + tmp);
            if (std::fabs(next) <= std::fabs(wksp_.back())) {
                wksp_.push_back(next);
                sum_ += 0.5 * next;
            } else {
                sum_ += next;
            }
        }
        ++n_;
        return sum_;
    }

  private:
    std::vector<double> wksp_;
    double sum_ = 0.0;
    long n_ = 0;
};

int auto_levels(const GreenSpec& spec) {
    if (spec.critical()) return 3;
    const double growth = spec.n - 1.0 - 2.0 * spec.sigma();  // term power at x = 1
    return std::max(3, static_cast<int>(std::ceil(growth)) + 3);
}

}  // namespace

std::vector<SeriesResult> series_partial_checkpoints(const GreenSpec& spec, double x,
                                                     const SeriesConfig& cfg,
                                                     const std::vector<long>& checkpoints) {
    if (!(x > -1.0 && x <= 1.0))
        throw std::domain_error(
            "series_partial: x must lie in (-1, 1]; x = -1 is the coincidence "
            "point where the Green function is singular");
    if (checkpoints.empty()) throw std::invalid_argument("series_partial: no checkpoints");
    for (size_t i = 1; i < checkpoints.size(); ++i)
        if (checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("series_partial: checkpoints must be ascending");
    if (checkpoints.front() < 1)
        throw std::invalid_argument("series_partial: checkpoints must be >= 1");

    const int n = spec.n;
    const double lam = 0.5 * (n - 1);
    const double sigma = spec.sigma();
    const double pref = 1.0 / ((n - 1.0) * sphere_volume(n));
    const int k_start = spec.critical() ? 1 : 0;
    const long K_max = checkpoints.back();

    CesaroStack cesaro(cfg.cesaro_levels > 0 ? cfg.cesaro_levels : auto_levels(spec));
    EulerSum euler;
    double partial = 0.0;

    // rolling Gegenbauer values
    double y_prev = 1.0;                  // P_0
    double y_curr = 2.0 * lam * x;        // P_1
    double eig = 0.0;
    double sign = (k_start % 2 == 0) ? 1.0 : -1.0;

    std::vector<SeriesResult> out;
    out.reserve(checkpoints.size());
    size_t next_cp = 0;

    // trailing snapshots for the error estimate / divergence detection
    std::vector<std::pair<long, double>> snaps;

    double accel_value = 0.0;
    long count = 0;
    for (int k = k_start; count < K_max; ++k, ++count) {
        double p_k;
        if (k == 0) p_k = 1.0;
        else if (k == 1) p_k = y_curr;
        else {
            double y_next =
                (2.0 * (k + lam - 1.0) * x * y_curr - (k + 2.0 * lam - 2.0) * y_prev) / k;
            y_prev = y_curr;
            y_curr = y_next;
            p_k = y_curr;
        }

        if (spec.critical()) {
            eig = eig_critical(n, k);
        } else if (k == k_start || (k - 1) + half(n) - sigma <= 0.0) {
            eig = gamma_ratio(k + half(n) + sigma, k + half(n) - sigma);
        } else {
            eig *= ((k - 1) + half(n) + sigma) / ((k - 1) + half(n) - sigma);
        }

        const double c_kn = (n + 2.0 * k - 1.0) * pref;
        const double term = sign * c_kn / eig * p_k;
        sign = -sign;
        partial += term;

        switch (cfg.accel) {
            case SeriesConfig::Accel::None: accel_value = partial; break;
            case SeriesConfig::Accel::CesaroAveraging: accel_value = cesaro.push(partial, count + 1); break;
            case SeriesConfig::Accel::EulerTransform: accel_value = euler.push(term); break;
        }

        const long done = count + 1;
        if ((done & (done - 1)) == 0) snaps.emplace_back(done, accel_value);  // powers of two

        if (next_cp < checkpoints.size() && done == checkpoints[next_cp]) {
            SeriesResult r;
            r.value = accel_value;
            r.terms = done;
            // error estimate: movement since roughly half as many terms
            double prev_snap = accel_value;
            for (auto it = snaps.rbegin(); it != snaps.rend(); ++it) {
                if (it->first * 2 <= done) {
                    prev_snap = it->second;
                    break;
                }
            }
            r.error_estimate = std::fabs(accel_value - prev_snap);
            // diverging if the last few doubling gaps grow monotonically
            if (snaps.size() >= 4) {
                double g1 = std::fabs(snaps[snaps.size() - 3].second - snaps[snaps.size() - 4].second);
                double g2 = std::fabs(snaps[snaps.size() - 2].second - snaps[snaps.size() - 3].second);
                double g3 = std::fabs(snaps[snaps.size() - 1].second - snaps[snaps.size() - 2].second);
                r.diverged = !std::isfinite(accel_value) ||
                             (g3 > g2 && g2 > g1 && g3 > 4.0 * g1 && g3 > cfg.target_tol);
            }
            out.push_back(r);
            ++next_cp;
        }
    }
    return out;
}

SeriesResult series_partial(const GreenSpec& spec, double x, const SeriesConfig& cfg) {
    return series_partial_checkpoints(spec, x, cfg, {cfg.max_terms}).front();
}

double moment_closed_log(int n, int k) {
    if (n < 2) throw std::invalid_argument("moment_closed_log: n must be >= 2");
    if (k < 1) throw std::invalid_argument("moment_closed_log: k must be >= 1");
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return -2.0 * std::sqrt(kPi) * gamma_real(half(n)) / gamma_real(half(n - 1)) * sign /
           (static_cast<double>(k) * (k + n - 1.0));
}

double moment_closed_pow(int n, double sigma, int k) {
    if (n < 2) throw std::invalid_argument("moment_closed_pow: n must be >= 2");
    if (k < 0) throw std::invalid_argument("moment_closed_pow: k must be >= 0");
    const double lam = 0.5 * (n - 1);
    // Rodrigues prefactor (-2)^k/k! Gamma(k+lam)Gamma(k+n-1)/(Gamma(lam)Gamma(2k+n-1))
    const double log_pre = k * std::numbers::ln2 + log_gamma(k + lam) +
                           log_gamma(k + n - 1.0) - log_gamma(lam) -
                           log_gamma(2.0 * k + n - 1.0) - log_gamma(k + 1.0);
    const double sign_pre = (k % 2 == 0) ? 1.0 : -1.0;
    // Gamma(n/2+k-sigma)/Gamma(n/2-sigma), sign-aware
    const double fac1 = gamma_ratio(half(n) + k - sigma, half(n) - sigma);
    // 2^{sigma+k+n/2-1} Gamma(sigma) Gamma(k+n/2) / Gamma(sigma+k+n/2)
    const double log_fac2 = (sigma + k + half(n) - 1.0) * std::numbers::ln2 +
                            log_gamma(sigma) + log_gamma(k + half(n)) -
                            log_gamma(sigma + k + half(n));
    return sign_pre * fac1 * std::exp(log_pre + log_fac2);
}

double moment_quad_log(int n, int k) {
    const double lam = 0.5 * (n - 1);
    const double wexp = 0.5 * (n - 2);
    return tanh_sinh_integrate([&](double x, double om, double op) {
        return std::log(op) * gegenbauer_eval(lam, k, x) * std::pow(om * op, wexp);
    });
}

double moment_quad_pow(int n, double sigma, int k) {
    const double lam = 0.5 * (n - 1);
    const double wexp = 0.5 * (n - 2);
    // (1+x)^{sigma-n/2} (1-x^2)^{(n-2)/2} = (1-x)^{(n-2)/2} (1+x)^{sigma-1}
    return tanh_sinh_integrate([&](double x, double om, double op) {
        return std::pow(om, wexp) * std::pow(op, sigma - 1.0) * gegenbauer_eval(lam, k, x);
    });
}

ResidualReport coefficient_match(const GreenSpec& spec, int k, double tol) {
    const int n = spec.n;
    if (spec.critical() && k < 1)
        throw std::invalid_argument("coefficient_match: critical case needs k >= 1");
    if (k < 0) throw std::invalid_argument("coefficient_match: k must be >= 0");

    const Rational lam_q(n - 1, 2);
    const double norm_sq = gegenbauer_norm_sq(lam_q, k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double eig = spec.critical() ? eig_critical(n, k)
                                       : eig_fractional(n, spec.sigma(), k);
    const double side_series = funk_hecke_coeff(n, k) / eig * sign * norm_sq;

    double side_closed;
    if (spec.critical()) {
        side_closed = -0.5 * const_critical(n) * moment_closed_log(n, k);
    } else {
        const double sigma = spec.sigma();
        const double kappa = const_power(n, sigma) * std::pow(2.0, sigma - half(n));
        side_closed = kappa * moment_closed_pow(n, sigma, k);
    }

    auto report = ResidualReport::numeric(
        "green.coefficient_match", side_series - side_closed, 0.0, tol,
        {{"n", std::to_string(n)},
         {"order", spec.order.str()},
         {"k", std::to_string(k)},
         {"side_series", std::to_string(side_series)},
         {"side_closed", std::to_string(side_closed)}});
    return report;
}

}  // namespace sphgreen
