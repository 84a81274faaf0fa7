#ifndef SPHGREEN_POLY_HPP
#define SPHGREEN_POLY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphgreen/errors.hpp"
#include "sphgreen/rational.hpp"

namespace sphgreen {

/// Configurable guard against runaway symbolic growth (default 64).
int poly_degree_cap();
void set_poly_degree_cap(int cap);

/// Univariate polynomial over the rationals, dense ascending-degree storage,
/// no trailing zero coefficient.
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rational& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    explicit Poly(long c) : Poly(Rational(c)) {}

    static Poly x() { return monomial(1, Rational(1)); }
    static Poly monomial(int deg, const Rational& c);
    static Poly from_coeffs(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly pow(unsigned e) const;

    Rational eval(const Rational& x) const;
    double eval(double x) const;

    Poly derivative(int order = 1) const;

    // Long division: returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Exact division; throws std::domain_error when the remainder is nonzero.
    Poly divexact(const Poly& d) const;

    Poly monic() const;
    Poly truncated(int max_deg) const;  // drop monomials of degree > max_deg
    // Multiplicity of the root x = 0 (index of first nonzero coefficient).
    int valuation() const;

    static Poly gcd(Poly a, Poly b);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

/// Exact value of the weighted monomial moment over [-1,1] with weight (1-x^2)^p:
/// zero for odd m, a Beta-type rational for even m.
Rational weighted_moment_exact(int m, int p);

/// Exact value of the weighted polynomial moment over [-1,1] with weight (1-x^2)^p.
Rational integrate_weighted(const Poly& q, int p);

/// Ratio of polynomials, reduced with monic denominator.
class RationalFn {
  public:
    RationalFn() : num_(), den_(Poly(1)) {}
    RationalFn(Poly num, Poly den);
    static RationalFn from_poly(Poly p) { return RationalFn(std::move(p), Poly(1)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

    RationalFn derivative() const;
    double eval(double x) const { return num_.eval(x) / den_.eval(x); }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string str(const std::string& var = "r") const;

  private:
    Poly num_, den_;
};

/// F'' + (n-1) F'/r on rational functions of the radius.
/// Inputs regular at r=0 must stay regular up to even-order poles; an odd-order
/// pole in the reduced result signals a non-radial-smooth input and throws.
RationalFn radial_laplacian(const RationalFn& F, int n);

/// Same operator seeded with the first derivative F' (for F outside the rational
/// field, e.g. log(1+r^2) with F' = 2r/(1+r^2)).
RationalFn radial_laplacian_from_derivative(const RationalFn& dF, int n);

}  // namespace sphgreen

#endif
