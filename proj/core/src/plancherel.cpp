#include "branchlaw/plancherel.hpp"

#include "branchlaw/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace branchlaw {

namespace {

constexpr double kPi = std::numbers::pi;

// Certified upper bound on log |Gamma(s + ix)| for x >= 4, built from the
// exact half-integer ladder
//   |Gamma(q + ix)|^2     = pi / (x sinh(pi x)) prod_{l<q} (l^2 + x^2)
//   |Gamma(q+1/2 + ix)|^2 = pi / cosh(pi x)     prod_{l<q} ((l+1/2)^2 + x^2)
// plus monotonicity of |Gamma(s+ix)| in s on s >= 1/2 (valid for x >= 2).
// The result is affine in log x: returns (const_term, logx_coeff); the -pi/2 x
// decay is accounted for by the caller.
struct EnvelopeTerm {
    double const_term = 0.0;
    double logx_coeff = 0.0;
};

EnvelopeTerm log_gamma_mod_envelope(double s) {
    EnvelopeTerm e;
    // shift s up into [1/2, 3/2); each unit step divides by |s+l+ix| >= x
    double sp = s;
    while (sp < 0.5) {
        sp += 1.0;
        e.logx_coeff -= 1.0;
    }
    // round up to the next half-integer target t >= sp
    const double t = std::ceil(2.0 * sp) / 2.0;
    const int q = static_cast<int>(std::floor(t));
    const bool half = (t != std::floor(t));
    // 2 log|Gamma(t+ix)| <= const + coeff*log x - pi x
    if (half) {
        // pi/cosh(pi x) <= 2 pi e^{-pi x}
        e.const_term += std::log(2.0 * kPi);
        for (int l = 0; l < q; ++l) {
            // (l+1/2)^2 + x^2 <= x^2 (1 + (l+1/2)^2/16) for x >= 4
            e.const_term += std::log1p((l + 0.5) * (l + 0.5) / 16.0);
            e.logx_coeff += 2.0;
        }
    } else {
        // pi/(x sinh(pi x)) <= (pi/x) * 2 e^{-pi x} / (1 - e^{-8 pi})
        e.const_term += std::log(2.0 * kPi / (1.0 - std::exp(-8.0 * kPi)));
        e.logx_coeff -= 1.0;
        for (int l = 0; l < q; ++l) {
            e.const_term += std::log1p(static_cast<double>(l) * l / 16.0);
            e.logx_coeff += 2.0;
        }
    }
    // halve: we assembled the bound for 2 log|Gamma|
    e.const_term *= 0.5;
    e.logx_coeff *= 0.5;
    return e;
}

// log density(x) <= C + P log x - pi x for x >= 4.
void density_envelope(const HahnParams& p, double& C, double& P) {
    C = -std::log(2.0 * kPi);
    P = 0.0;
    for (const Rational& s : {p.a, p.b, p.c}) {
        const EnvelopeTerm e = log_gamma_mod_envelope(to_double(s));
        C += 2.0 * e.const_term;
        P += 2.0 * e.logx_coeff;
    }
    // -2 log|Gamma(2ix)| = log(2 x sinh(2 pi x) / pi) <= log(x/pi) + 2 pi x
    C += -std::log(kPi);
    P += 1.0;
}

}  // namespace

double density(double x, const HahnParams& p) {
    if (!(x > 0.0)) throw std::invalid_argument("density: require x > 0");
    const std::complex<double> ix(0.0, x);
    const std::complex<double> lg = log_gamma(to_double(p.a) + ix) + log_gamma(to_double(p.b) + ix) +
                                    log_gamma(to_double(p.c) + ix) - log_gamma(2.0 * ix);
    return std::exp(2.0 * lg.real()) / (2.0 * kPi);
}

std::vector<Atom> atoms(const HahnParams& p) {
    std::vector<Atom> out;
    if (p.c >= 0) return out;
    // prefactor Gamma(a+c) Gamma(c+b) Gamma(b-c) Gamma(a-c) / Gamma(-2c):
    // all arguments positive once an atom exists, so only the rational
    // Pochhammer ratio carries a sign.
    const double log_pref = log_gamma_real(to_double(p.a + p.c)) + log_gamma_real(to_double(p.c + p.b)) +
                            log_gamma_real(to_double(p.b - p.c)) + log_gamma_real(to_double(p.a - p.c)) -
                            log_gamma_real(to_double(-2 * p.c));
    for (int j = 0; p.c + j < 0; ++j) {
        // log-magnitude and sign accumulated factor by factor so large n-m
        // cannot overflow intermediate products
        double log_abs = 0.0;
        int sign = (j % 2 == 1) ? -1 : 1;
        const Rational num_bases[4] = {2 * p.c, p.c + 1, p.c + p.b, p.c + p.a};
        const Rational den_bases[4] = {p.c, p.c - p.b + 1, p.c - p.a + 1, Rational(1)};
        for (int l = 0; l < j; ++l) {
            for (const Rational& t : num_bases) {
                const Rational f = t + l;
                if (f < 0) sign = -sign;
                log_abs += std::log(std::abs(to_double(f)));
            }
            for (const Rational& t : den_bases) {
                const Rational f = t + l;
                if (f < 0) sign = -sign;
                log_abs -= std::log(std::abs(to_double(f)));
            }
        }
        Atom atom;
        atom.j = j;
        atom.y = -pow_int(p.c + j, 2);
        atom.mass = sign * std::exp(log_pref + log_abs);
        atom.casimir = -(pow_int(p.a, 2) + atom.y);
        out.push_back(std::move(atom));
    }
    return out;
}

double certified_tail_bound(const HahnParams& p, double X, int degree_y) {
    if (X < 4.0) throw std::invalid_argument("certified_tail_bound: valid for X >= 4 only");
    double C = 0.0, P = 0.0;
    density_envelope(p, C, P);
    P += 2.0 * degree_y;
    const double lambda = kPi - P / X;
    if (lambda <= 0.0) return std::numeric_limits<double>::infinity();
    // int_X^inf x^P e^{-pi x} dx <= X^P e^{-pi X} / lambda  (P log x - pi x
    // has derivative <= -lambda past X)
    return std::exp(C + P * std::log(X) - kPi * X) / lambda;
}

PlancherelMeasure make_measure(const HahnParams& p, const MeasureOptions& options) {
    PlancherelMeasure mu;
    mu.params = p;
    mu.options = options;
    mu.atoms = atoms(p);
    double X = 4.0;
    while (certified_tail_bound(p, X, options.max_degree_y) > options.tail_tol) {
        X += 1.0;
        if (X > 400.0)
            throw std::runtime_error("make_measure: cannot certify truncation below tail_tol");
    }
    mu.x_max = X;
    return mu;
}

double integrate(const std::function<double(double)>& f_of_y, const PlancherelMeasure& mu) {
    return integrate(f_of_y, mu, mu.options.quad);
}

double integrate(const std::function<double(double)>& f_of_y, const PlancherelMeasure& mu,
                 const QuadratureSpec& quad) {
    const auto integrand = [&](double x) { return density(x, mu.params) * f_of_y(x * x); };
    const QuadratureResult q = integrate_adaptive(integrand, 0.0, mu.x_max, quad);
    double value = q.value;
    for (const Atom& atom : mu.atoms) value += atom.mass * f_of_y(to_double(atom.y));
    return value;
}

double total_mass(const PlancherelMeasure& mu) {
    return integrate([](double) { return 1.0; }, mu);
}

double continuous_mass(const PlancherelMeasure& mu) {
    const auto integrand = [&](double x) { return density(x, mu.params); };
    return integrate_adaptive(integrand, 0.0, mu.x_max, mu.options.quad).value;
}

double multiplication_symbol(double y, const HahnParams& p) {
    return -(to_double(pow_int(p.a, 2)) + y);
}

Rational multiplication_symbol(const Rational& y, const HahnParams& p) {
    return -(pow_int(p.a, 2) + y);
}

OrthogonalityReport verify_orthogonality(int n, int m, int k_max, double tol,
                                         const MeasureOptions& options) {
    const HahnParams p = hahn_params(n, m);
    MeasureOptions opts = options;
    opts.max_degree_y = std::max(opts.max_degree_y, 2 * k_max);
    const PlancherelMeasure mu = make_measure(p, opts);

    std::vector<double> diag(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k)
        diag[static_cast<size_t>(k)] =
            std::exp(log_gamma_real(k + 0.5 * n) + log_gamma_real(k + 0.5 * m) +
                     2.0 * log_gamma_real(k + 1.0));

    OrthogonalityReport report;
    report.n = n;
    report.m = m;
    report.k_max = k_max;
    report.tol = tol;
    for (int k = 0; k <= k_max; ++k) {
        for (int l = k; l <= k_max; ++l) {
            // cross terms integrate to zero, so the quadrature target must be
            // absolute, scaled to the entry's natural size
            QuadratureSpec quad = opts.quad;
            quad.abs_tol = 1e-13 * std::sqrt(diag[static_cast<size_t>(k)] *
                                             diag[static_cast<size_t>(l)]);
            const double g = integrate(
                [&](double y) { return hahn_S(k, y, p) * hahn_S(l, y, p); }, mu, quad);
            if (k == l) {
                const double rel = std::abs(g - diag[static_cast<size_t>(k)]) / diag[static_cast<size_t>(k)];
                report.max_diag_rel_err = std::max(report.max_diag_rel_err, rel);
            } else {
                const double scale =
                    std::sqrt(diag[static_cast<size_t>(k)] * diag[static_cast<size_t>(l)]);
                report.max_offdiag_over_scale =
                    std::max(report.max_offdiag_over_scale, std::abs(g) / scale);
            }
        }
    }
    report.pass = report.max_diag_rel_err <= tol && report.max_offdiag_over_scale <= tol;
    return report;
}

}  // namespace branchlaw
