#ifndef SPHGREEN_SERIES_RIGIDITY_HPP
#define SPHGREEN_SERIES_RIGIDITY_HPP

#include <string>
#include <vector>

#include "sphgreen/rational.hpp"

namespace sphgreen {

/// Element of Q(sqrt(c0)): p + q sqrt(c0). The extension field keeps the
/// rotationally symmetric recursion exact whether or not c0 is a square.
struct QuadExt {
    Rational p, q;

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    std::string str() const;
};

QuadExt qe_add(const QuadExt& a, const QuadExt& b);
QuadExt qe_sub(const QuadExt& a, const QuadExt& b);
QuadExt qe_mul(const QuadExt& a, const QuadExt& b, const Rational& c0);
QuadExt qe_scale(const QuadExt& a, const Rational& s);

struct SeriesRigidity {
    Rational c0;
    std::vector<QuadExt> coeffs;  // a_1 .. a_N, with a_1 = +sqrt(c0)

    /// True when sqrt(c0) is rational, so every coefficient folds into Q.
    bool rational() const;
    std::vector<Rational> as_rationals() const;
};

/// Solves the power-series recursion of the rotationally symmetric Green
/// equation: a_1^2 = c0 and the degree-n linear step for a_{n+1}.
SeriesRigidity series_rigidity_solve(const Rational& c0, int N);

/// Coefficients 0..N-1 of the cleared-denominator equation evaluated on the
/// solved series; all must be exactly zero.
std::vector<QuadExt> series_rigidity_residual(const SeriesRigidity& sol);

/// Taylor coefficients of the sphere solution (1/sqrt(c))(1 - sqrt(1 - c t))
/// with c = 4 c0, as elements of Q(sqrt(c0)).
std::vector<QuadExt> sphere_series_oracle(const Rational& c0, int N);

}  // namespace sphgreen

#endif
