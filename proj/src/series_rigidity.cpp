#include "sphgreen/series_rigidity.hpp"

#include <stdexcept>

namespace sphgreen {

std::string QuadExt::str() const {
    if (q.is_zero()) return p.str();
    std::string s = q.str() + "*sqrt(c0)";
    if (p.is_zero()) return s;
    return p.str() + (q.sign() > 0 ? " + " : " ") + s;
}

QuadExt qe_add(const QuadExt& a, const QuadExt& b) { return {a.p + b.p, a.q + b.q}; }
QuadExt qe_sub(const QuadExt& a, const QuadExt& b) { return {a.p - b.p, a.q - b.q}; }

QuadExt qe_mul(const QuadExt& a, const QuadExt& b, const Rational& c0) {
    return {a.p * b.p + c0 * a.q * b.q, a.p * b.q + a.q * b.p};
}

QuadExt qe_scale(const QuadExt& a, const Rational& s) { return {a.p * s, a.q * s}; }

bool SeriesRigidity::rational() const {
    Rational root;
    return sqrt_exact(c0, root);
}

std::vector<Rational> SeriesRigidity::as_rationals() const {
    Rational root;
    if (!sqrt_exact(c0, root))
        throw std::domain_error("SeriesRigidity: c0 = " + c0.str() +
                                " is not a rational square; coefficients live in Q(sqrt(c0))");
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& a : coeffs) out.push_back(a.p + a.q * root);
    return out;
}

namespace {

// Series blocks of the cleared-denominator equation; `a` is 1-indexed
// (a[0] unused), and indices beyond a.size()-1 count as zero.
struct Blocks {
    const std::vector<QuadExt>& a;
    const Rational& c0;

    QuadExt coeff(size_t m) const {
        return m < a.size() ? a[m] : QuadExt{Rational(0), Rational(0)};
    }

    QuadExt A(int n) const {  // t + f^2 = t sum A_n t^n
        if (n == 0) return {Rational(1), Rational(0)};
        QuadExt s{Rational(0), Rational(0)};
        for (int k = 1; k <= n; ++k)
            s = qe_add(s, qe_mul(coeff(static_cast<size_t>(k)),
                                 coeff(static_cast<size_t>(n + 1 - k)), c0));
        return s;
    }

    QuadExt B(int n) const {  // f - 2tf' = -t sum B_n t^n
        return qe_scale(coeff(static_cast<size_t>(n + 1)), Rational(2 * n + 1));
    }

    QuadExt C(int n) const {  // f' + tf'' + 2tf'^3 = sum C_n t^n
        QuadExt s = qe_scale(coeff(static_cast<size_t>(n + 1)),
                             Rational(static_cast<long>(n + 1) * (n + 1)));
        for (int k = 0; k <= n - 1; ++k)
            for (int l = 0; l <= n - 1 - k; ++l) {
                const int p = n - 1 - k - l;
                const Rational w(2L * (k + 1) * (l + 1) * (p + 1));
                QuadExt prod = qe_mul(coeff(static_cast<size_t>(k + 1)),
                                      coeff(static_cast<size_t>(l + 1)), c0);
                prod = qe_mul(prod, coeff(static_cast<size_t>(p + 1)), c0);
                s = qe_add(s, qe_scale(prod, w));
            }
        return s;
    }

    QuadExt D(int n) const {  // 1 + 4tf'^2 = sum D_n t^n
        if (n == 0) return {Rational(1), Rational(0)};
        QuadExt s{Rational(0), Rational(0)};
        for (int k = 0; k <= n - 1; ++k) {
            const int l = n - 1 - k;
            const Rational w(4L * (k + 1) * (l + 1));
            s = qe_add(s, qe_scale(qe_mul(coeff(static_cast<size_t>(k + 1)),
                                          coeff(static_cast<size_t>(l + 1)), c0),
                                   w));
        }
        return s;
    }

    // Degree-n coefficient of LHS - RHS (after dividing out t^2):
    //   -2 sum A_i B_j C_k + sum B_i B_j D_k + c0 sum A_i A_j D_k D_l
    QuadExt equation(int n) const {
        QuadExt s{Rational(0), Rational(0)};
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j) {
                const int k = n - i - j;
                QuadExt abc = qe_mul(qe_mul(A(i), B(j), c0), C(k), c0);
                QuadExt bbd = qe_mul(qe_mul(B(i), B(j), c0), D(k), c0);
                s = qe_add(s, qe_sub(bbd, qe_scale(abc, Rational(2))));
            }
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j)
                for (int k = 0; k <= n - i - j; ++k) {
                    const int l = n - i - j - k;
                    QuadExt aadd = qe_mul(qe_mul(A(i), A(j), c0),
                                          qe_mul(D(k), D(l), c0), c0);
                    s = qe_add(s, qe_scale(aadd, c0));
                }
        return s;
    }
};

}  // namespace

SeriesRigidity series_rigidity_solve(const Rational& c0, int N) {
    if (c0.sign() <= 0) throw std::invalid_argument("series_rigidity_solve: c0 must be positive");
    if (N < 1) throw std::invalid_argument("series_rigidity_solve: N must be >= 1");

    SeriesRigidity sol;
    sol.c0 = c0;
    sol.coeffs.assign(static_cast<size_t>(N) + 1, QuadExt{Rational(0), Rational(0)});
    sol.coeffs[1] = {Rational(0), Rational(1)};  // a_1 = +sqrt(c0)

    Blocks blocks{sol.coeffs, c0};
    for (int n = 1; n < N; ++n) {
        // With a_{n+1} held at zero the equation coefficient equals
        // Psi_n - 0; the linear term is -2(n+1)^2 a_1 a_{n+1}.
        QuadExt psi = blocks.equation(n);
        // a_{n+1} = psi / (2 (n+1)^2 a_1); division by sqrt(c0) swaps components.
        const Rational scale = Rational(1) / Rational(2L * (n + 1) * (n + 1));
        QuadExt scaled = qe_scale(psi, scale);
        sol.coeffs[static_cast<size_t>(n) + 1] = {scaled.q, scaled.p / c0};
    }
    sol.coeffs.erase(sol.coeffs.begin());  // drop the unused index 0
    return sol;
}

std::vector<QuadExt> series_rigidity_residual(const SeriesRigidity& sol) {
    std::vector<QuadExt> a1;
    a1.reserve(sol.coeffs.size() + 1);
    a1.push_back({Rational(0), Rational(0)});
    for (const auto& c : sol.coeffs) a1.push_back(c);
    Blocks blocks{a1, sol.c0};
    std::vector<QuadExt> out;
    const int N = static_cast<int>(sol.coeffs.size());
    out.reserve(static_cast<size_t>(N));
    for (int n = 0; n < N; ++n) out.push_back(blocks.equation(n));
    return out;
}

std::vector<QuadExt> sphere_series_oracle(const Rational& c0, int N) {
    if (c0.sign() <= 0) throw std::invalid_argument("sphere_series_oracle: c0 must be positive");
    // f = (1/sqrt(c))(1 - sqrt(1 - c t)), c = 4 c0:
    // a_m = gamma_m 2^{2m-1} c0^{m-1} sqrt(c0), gamma_m = (-1)^{m+1} binom(1/2, m).
    std::vector<QuadExt> out;
    out.reserve(static_cast<size_t>(N));
    Rational binom_half(1, 2);  // binom(1/2, 1)
    Rational pow2(2);           // 2^{2m-1} at m = 1
    Rational pow_c0(1);         // c0^{m-1} at m = 1
    for (int m = 1; m <= N; ++m) {
        Rational gamma = (m % 2 == 0) ? -binom_half : binom_half;
        out.push_back({Rational(0), gamma * pow2 * pow_c0});
        // binom(1/2, m+1) = binom(1/2, m) (1/2 - m)/(m+1)
        binom_half *= (Rational(1, 2) - Rational(m)) / Rational(m + 1);
        pow2 *= Rational(4);
        pow_c0 *= c0;
    }
    return out;
}

}  // namespace sphgreen
