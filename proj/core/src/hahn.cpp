#include "branchlaw/hahn.hpp"

#include "branchlaw/gamma.hpp"

#include <cmath>

namespace branchlaw {

SpectralValue SpectralValue::continuous(Rational y_pos) {
    if (y_pos <= 0)
        throw std::invalid_argument("SpectralValue: continuous branch requires y > 0");
    return SpectralValue{std::move(y_pos), false};
}

SpectralValue SpectralValue::discrete_point(const HahnParams& p, int j) {
    if (j < 0 || p.c + j >= 0)
        throw std::invalid_argument("SpectralValue: discrete point requires c + j < 0");
    return SpectralValue{-pow_int(p.c + j, 2), true};
}

HahnParams hahn_params(int n, int m) {
    if (n < m || m < 1) throw std::invalid_argument("hahn_params: require n >= m >= 1");
    HahnParams p;
    p.n = n;
    p.m = m;
    p.a = Rational(m - 1, 2) + Rational(n - m, 4);
    p.b = Rational(1, 2) + Rational(n - m, 4);
    p.c = Rational(1, 2) - Rational(n - m, 4);
    return p;
}

Rational hahn_S(int k, const Rational& y, const HahnParams& p) {
    if (k < 0) throw std::invalid_argument("hahn_S: k must be nonnegative");
    const Rational ab = p.a + p.b, ac = p.a + p.c;
    Rational sum = 0;
    Rational term = 1;  // (-k)_j / ((a+b)_j (a+c)_j j!) * prod_{l<j}((a+l)^2+y)
    for (int j = 0; j <= k; ++j) {
        sum += term;
        if (j == k) break;
        term *= Rational(-k + j) * (pow_int(p.a + j, 2) + y) / ((ab + j) * (ac + j) * (j + 1));
    }
    return sum * pochhammer(ab, k) * pochhammer(ac, k);
}

double hahn_S(int k, double y, const HahnParams& p) {
    if (k < 0) throw std::invalid_argument("hahn_S: k must be nonnegative");
    const double a = to_double(p.a), ab = to_double(p.a + p.b), ac = to_double(p.a + p.c);
    double sum = 0, term = 1;
    for (int j = 0; j <= k; ++j) {
        sum += term;
        if (j == k) break;
        term *= (-k + j) * ((a + j) * (a + j) + y) / ((ab + j) * (ac + j) * (j + 1));
    }
    return sum * to_double(pochhammer(p.a + p.b, k) * pochhammer(p.a + p.c, k));
}

Rational hahn_S(int k, const SpectralValue& y, const HahnParams& p) {
    return hahn_S(k, y.y, p);
}

std::vector<Rational> hahn_S_coeffs(int k, const HahnParams& p) {
    if (k < 0) throw std::invalid_argument("hahn_S_coeffs: k must be nonnegative");
    const Rational ab = p.a + p.b, ac = p.a + p.c;
    std::vector<Rational> coeffs(static_cast<size_t>(k) + 1, Rational(0));
    Rational scalar = 1;  // (-k)_j / ((a+b)_j (a+c)_j j!)
    std::vector<Rational> prod{Rational(1)};
    for (int j = 0; j <= k; ++j) {
        for (size_t i = 0; i < prod.size(); ++i) coeffs[i] += scalar * prod[i];
        if (j == k) break;
        // multiply running product by ((a+j)^2 + y)
        std::vector<Rational> next(prod.size() + 1, Rational(0));
        const Rational sq = pow_int(p.a + j, 2);
        for (size_t i = 0; i < prod.size(); ++i) {
            next[i] += prod[i] * sq;
            next[i + 1] += prod[i];
        }
        prod = std::move(next);
        scalar *= Rational(-k + j) / ((ab + j) * (ac + j) * (j + 1));
    }
    const Rational norm = pochhammer(ab, k) * pochhammer(ac, k);
    for (auto& c : coeffs) c *= norm;
    return coeffs;
}

Rational hahn_Stilde(int k, const Rational& y, const HahnParams& p) {
    return hahn_S(k, y, p) / (pochhammer(p.a + p.b, k) * pochhammer(p.a + p.c, k));
}

Rational hahn_Ap(int k, const HahnParams& p) { return k * (k + p.b + p.c - 1); }
Rational hahn_Cp(int k, const HahnParams& p) { return (k + p.a + p.b) * (k + p.a + p.c); }
Rational hahn_Bp(int k, const HahnParams& p) { return -(hahn_Ap(k, p) + hahn_Cp(k, p)); }

Rational hahn_recurrence_next(int k, const Rational& y, const HahnParams& p, const Rational& st_k,
                              const Rational& st_km1) {
    const Rational cp = hahn_Cp(k, p);
    if (cp == 0) throw std::domain_error("hahn_recurrence_next: Cp_k vanishes");
    Rational rhs = -(pow_int(p.a, 2) + y) * st_k - hahn_Bp(k, p) * st_k;
    if (k > 0) rhs -= hahn_Ap(k, p) * st_km1;
    return rhs / cp;
}

double hahn_recurrence_next(int k, double y, const HahnParams& p, double st_k, double st_km1) {
    const double ap = to_double(hahn_Ap(k, p));
    const double bp = to_double(hahn_Bp(k, p));
    const double cp = to_double(hahn_Cp(k, p));
    if (cp == 0) throw std::domain_error("hahn_recurrence_next: Cp_k vanishes");
    const double a2 = to_double(pow_int(p.a, 2));
    return (-(a2 + y) * st_k - bp * st_k - (k > 0 ? ap * st_km1 : 0.0)) / cp;
}

Rational alpha_ratio(int n, int m, int k) {
    return pow_int(Rational(4), k) * pochhammer(Rational(m, 2), k) * pochhammer(Rational(n, 2), k);
}

Rational alpha_sq_gamma_free(int n, int m, int k) {
    return pow_int(alpha_ratio(n, m, k), 2);
}

double alpha(int n, int m, int k) {
    const double lg = log_gamma_real(0.5 * m) + log_gamma_real(0.5 * n);
    return std::exp(-0.5 * lg) * to_double(alpha_ratio(n, m, k));
}

double stilde_alpha(int k, double y, const HahnParams& p) {
    double st_km1 = 0.0, st_k = 1.0;
    for (int j = 0; j < k; ++j) {
        const double next = hahn_recurrence_next(j, y, p, st_k, st_km1);
        st_km1 = st_k;
        st_k = next;
    }
    return alpha(p.n, p.m, k) * st_k;
}

Rational stilde_alpha_ratio(int k, const Rational& y, const HahnParams& p) {
    return alpha_ratio(p.n, p.m, k) * hahn_Stilde(k, y, p);
}

}  // namespace branchlaw
