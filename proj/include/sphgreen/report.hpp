#ifndef SPHGREEN_REPORT_HPP
#define SPHGREEN_REPORT_HPP

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sphgreen {

/// Uniform output record of the verification ops: a named scalar residual, its
/// target, the achieved value, and provenance metadata. Exact-arithmetic paths
/// set `exact` and pass iff value literally equals target.
struct ResidualReport {
    std::string name;
    double value = 0.0;
    double target = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::optional<std::string> exact;  // rational rendering when the path is exact
    std::vector<std::pair<std::string, std::string>> params;

    static ResidualReport numeric(std::string name, double value, double target,
                                  double tolerance,
                                  std::vector<std::pair<std::string, std::string>> params = {}) {
        ResidualReport r;
        r.name = std::move(name);
        r.value = value;
        r.target = target;
        r.tolerance = tolerance;
        r.pass = std::isfinite(value) && std::fabs(value - target) <= tolerance;
        r.params = std::move(params);
        return r;
    }

    static ResidualReport exact_match(std::string name, bool equal, std::string rendered,
                                      std::vector<std::pair<std::string, std::string>> params = {}) {
        return exact_valued(std::move(name), equal, std::move(rendered), equal ? 0.0 : 1.0,
                            0.0, std::move(params));
    }

    /// Exact-path report carrying the decimal rendering of the exact values;
    /// pass reflects the exact comparison, never the doubles.
    static ResidualReport exact_valued(std::string name, bool equal, std::string rendered,
                                       double value, double target,
                                       std::vector<std::pair<std::string, std::string>> params = {}) {
        ResidualReport r;
        r.name = std::move(name);
        r.value = value;
        r.target = target;
        r.tolerance = 0.0;
        r.pass = equal;
        r.exact = std::move(rendered);
        r.params = std::move(params);
        return r;
    }
};

}  // namespace sphgreen

#endif
