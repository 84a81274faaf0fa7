#ifndef SPHGREEN_ERRORS_HPP
#define SPHGREEN_ERRORS_HPP

#include <stdexcept>

namespace sphgreen {

/// Gamma-function pole or an order parameter sitting on one.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested operator has non-constants in its kernel: no Green function.
struct KernelObstructionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Iterative solver (quadrature nodes, geodesic integration) failed to settle.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Symbolic degree guard tripped.
struct DegreeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point outside a surface chart.
struct ChartError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace sphgreen

#endif
