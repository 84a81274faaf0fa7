#include "sphgreen/poly.hpp"

#include <sstream>

namespace sphgreen {

namespace {
int g_degree_cap = 64;
}

int poly_degree_cap() { return g_degree_cap; }

void set_poly_degree_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("poly_degree_cap must be positive");
    g_degree_cap = cap;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int deg, const Rational& c) {
    if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    int deg = a.degree() + b.degree();
    if (deg > poly_degree_cap())
        throw DegreeCapError("polynomial product degree " + std::to_string(deg) +
                             " exceeds cap " + std::to_string(poly_degree_cap()));
    Poly p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    p.normalize();
    return p;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly p = *this;
    for (auto& ci : p.c_) ci *= c;
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly acc(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double Poly::eval(double x) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->to_double();
    return r;
}

Poly Poly::derivative(int order) const {
    if (order < 0) throw std::invalid_argument("Poly::derivative: negative order");
    Poly p = *this;
    for (int o = 0; o < order; ++o) {
        if (p.is_zero()) return p;
        std::vector<Rational> d;
        d.reserve(p.c_.size() > 0 ? p.c_.size() - 1 : 0);
        for (size_t k = 1; k < p.c_.size(); ++k)
            d.push_back(p.c_[k] * Rational(static_cast<long>(k)));
        p.c_ = std::move(d);
        p.normalize();
    }
    return p;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    Poly q, r = *this;
    if (r.degree() < d.degree()) return {q, r};
    q.c_.assign(static_cast<size_t>(r.degree() - d.degree()) + 1, Rational(0));
    Rational lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Rational c = r.leading() * lead_inv;
        q.c_[static_cast<size_t>(k)] = c;
        // r -= c x^k d
        for (size_t i = 0; i < d.c_.size(); ++i)
            r.c_[static_cast<size_t>(k) + i] -= c * d.c_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero())
        throw std::domain_error("Poly::divexact: nonzero remainder " + r.str());
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

Poly Poly::truncated(int max_deg) const {
    Poly p;
    if (max_deg < 0) return p;
    size_t keep = std::min(c_.size(), static_cast<size_t>(max_deg) + 1);
    p.c_.assign(c_.begin(), c_.begin() + static_cast<long>(keep));
    p.normalize();
    return p;
}

int Poly::valuation() const {
    if (is_zero()) return 0;
    int v = 0;
    while (c_[static_cast<size_t>(v)].is_zero()) ++v;
    return v;
}

Poly Poly::gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly r = a.divmod(b).second;
        a = b;
        b = r.is_zero() ? r : r.monic();
    }
    return a;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (k == 0 || a != Rational(1)) os << a.str();
        if (k > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Rational weighted_moment_exact(int m, int p) {
    if (m < 0 || p < 0) throw std::invalid_argument("weighted_moment_exact: negative arguments");
    if (m % 2 == 1) return Rational(0);
    Rational total(0);
    for (int j = 0; j <= p; ++j) {
        Rational term(BigInt(2) * binomial(static_cast<unsigned long>(p),
                                           static_cast<unsigned long>(j)),
                      BigInt(m + 2 * j + 1));
        if (j % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

Rational integrate_weighted(const Poly& q, int p) {
    Rational total(0);
    for (int k = 0; k <= q.degree(); k += 2)
        total += q.coeff(k) * weighted_moment_exact(k, p);
    return total;
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational lead = den_.leading();
    den_ = den_.scaled(lead.inverse());
    num_ = num_.scaled(lead.inverse());
}

RationalFn RationalFn::operator-() const { return RationalFn(-num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFn RationalFn::derivative() const {
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RationalFn::str(const std::string& var) const {
    if (den_ == Poly(1)) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

RationalFn radial_laplacian_from_derivative(const RationalFn& dF, int n) {
    if (n < 1) throw std::invalid_argument("radial_laplacian: dimension must be positive");
    RationalFn over_r(dF.num().scaled(Rational(n - 1)), dF.den() * Poly::x());
    return dF.derivative() + over_r;
}

RationalFn radial_laplacian(const RationalFn& F, int n) {
    const bool input_regular = F.den().valuation() == 0;
    RationalFn result = radial_laplacian_from_derivative(F.derivative(), n);
    if (input_regular && result.den().valuation() % 2 == 1)
        throw std::domain_error(
            "radial_laplacian: result carries an odd-order pole at r=0 "
            "(input is not a smooth radial function)");
    return result;
}

}  // namespace sphgreen
