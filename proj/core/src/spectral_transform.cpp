#include "branchlaw/spectral_transform.hpp"

#include "branchlaw/gamma.hpp"
#include "branchlaw/radial_ops.hpp"
#include "branchlaw/sym_poly.hpp"

#include <cmath>

namespace branchlaw {

namespace {

// u_k = St^alpha_k / sqrt(psi_norm_sq) has the Gamma-free form
//   u_k(y) = sqrt((m/2)_k (n/2)_k) / (k! sqrt(Gamma(m/2) Gamma(n/2))) * St_k(y).
double unit_prefactor(int k, const HahnParams& p) {
    const double log_poch = std::log(to_double(pochhammer(Rational(p.m, 2), k) *
                                               pochhammer(Rational(p.n, 2), k)));
    const double log_gam = log_gamma_real(0.5 * p.m) + log_gamma_real(0.5 * p.n);
    return std::exp(0.5 * log_poch - log_gamma_real(k + 1.0) - 0.5 * log_gam);
}

// St_0..St_kmax at y via the three-term recurrence.
std::vector<double> stilde_values(int k_max, double y, const HahnParams& p) {
    std::vector<double> st(static_cast<size_t>(k_max) + 1);
    st[0] = 1.0;
    if (k_max == 0) return st;
    double st_km1 = 0.0;
    for (int k = 0; k < k_max; ++k) {
        st[static_cast<size_t>(k + 1)] = hahn_recurrence_next(k, y, p, st[static_cast<size_t>(k)], st_km1);
        st_km1 = st[static_cast<size_t>(k)];
    }
    return st;
}

}  // namespace

double unit_vector_value(int k, double y, const HahnParams& p) {
    return unit_prefactor(k, p) * stilde_values(k, y, p).back();
}

SpectralFunction transform(const CoefficientVector& v) {
    const HahnParams p = hahn_params(v.n, v.m);
    const int k_max = static_cast<int>(v.coeffs.size()) - 1;
    std::vector<double> pref(v.coeffs.size());
    for (int k = 0; k <= k_max; ++k) pref[static_cast<size_t>(k)] = unit_prefactor(k, p);
    SpectralFunction out;
    out.degree_y = k_max;
    out.fn = [p, coeffs = v.coeffs, pref, k_max](double y) {
        if (k_max < 0) return 0.0;
        const std::vector<double> st = stilde_values(std::max(k_max, 0), y, p);
        double s = 0.0;
        for (size_t k = 0; k < coeffs.size(); ++k) s += coeffs[k] * pref[k] * st[k];
        return s;
    };
    return out;
}

UnitarityReport verify_unitarity(int n, int m, int k_max, double tol, const MeasureOptions& options) {
    const HahnParams p = hahn_params(n, m);
    MeasureOptions opts = options;
    opts.max_degree_y = std::max(opts.max_degree_y, 2 * k_max);
    const PlancherelMeasure mu = make_measure(p, opts);

    UnitarityReport report;
    report.n = n;
    report.m = m;
    report.k_max = k_max;
    report.tol = tol;
    std::vector<double> pref(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) pref[static_cast<size_t>(k)] = unit_prefactor(k, p);

    QuadratureSpec quad = opts.quad;
    quad.abs_tol = 1e-12;  // the family is orthonormal, entries are O(1)
    for (int k = 0; k <= k_max; ++k) {
        for (int l = k; l <= k_max; ++l) {
            const double g = integrate(
                [&](double y) {
                    const std::vector<double> st = stilde_values(std::max(k, l), y, p);
                    return pref[static_cast<size_t>(k)] * st[static_cast<size_t>(k)] *
                           pref[static_cast<size_t>(l)] * st[static_cast<size_t>(l)];
                },
                mu, quad);
            const double dev = std::abs(g - (k == l ? 1.0 : 0.0));
            report.max_gram_deviation = std::max(report.max_gram_deviation, dev);
        }
    }
    report.pass = report.max_gram_deviation <= tol;
    return report;
}

Eigen::MatrixXd operator_matrix(int n, int m, int k_max, const MeasureOptions& options) {
    const HahnParams p = hahn_params(n, m);
    MeasureOptions opts = options;
    opts.max_degree_y = std::max(opts.max_degree_y, 2 * k_max + 1);
    const PlancherelMeasure mu = make_measure(p, opts);

    std::vector<double> pref(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) pref[static_cast<size_t>(k)] = unit_prefactor(k, p);

    // entries are O(|B_{k_max}|); far-from-diagonal ones vanish
    QuadratureSpec quad = opts.quad;
    quad.abs_tol = 1e-12 * std::abs(to_double(jacobi_coeffs(n, m, k_max).B));
    Eigen::MatrixXd M(k_max + 1, k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        for (int l = 0; l <= k_max; ++l) {
            M(l, k) = integrate(
                [&](double y) {
                    const std::vector<double> st = stilde_values(std::max(k, l), y, p);
                    return multiplication_symbol(y, p) * pref[static_cast<size_t>(k)] *
                           st[static_cast<size_t>(k)] * pref[static_cast<size_t>(l)] *
                           st[static_cast<size_t>(l)];
                },
                mu, quad);
        }
    }
    return M;
}

BranchingSummary branching_summary(int n, int m, const MeasureOptions& options) {
    const HahnParams p = hahn_params(n, m);
    const PlancherelMeasure mu = make_measure(p, options);
    BranchingSummary s;
    s.n = n;
    s.m = m;
    s.params = p;
    s.total_mass = total_mass(mu);
    s.continuous_total_mass = continuous_mass(mu);
    s.discrete = mu.atoms;
    return s;
}

}  // namespace branchlaw
