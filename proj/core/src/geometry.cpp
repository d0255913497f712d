#include "branchlaw/geometry.hpp"

#include "branchlaw/rng.hpp"
#include "branchlaw/sym_poly.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace branchlaw {

namespace {

Eigen::MatrixXcd form_matrix(int n, int m) {
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Identity(n + m, n + m);
    J.bottomRightCorner(m, m) *= -1.0;
    return J;
}

}  // namespace

double DomainPoint::boundary_margin() const {
    const Eigen::MatrixXcd q =
        Eigen::MatrixXcd::Identity(n(), n()) - z * z.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q);
    return es.eigenvalues().minCoeff();
}

double GroupElement::form_defect() const {
    const Eigen::MatrixXcd J = form_matrix(n, m);
    return (g.adjoint() * J * g - J).cwiseAbs().maxCoeff();
}

bool GroupElement::is_real(double tol) const { return g.imag().cwiseAbs().maxCoeff() <= tol; }

Eigen::MatrixXcd mobius_action(const GroupElement& g, const Eigen::MatrixXcd& z) {
    const Eigen::MatrixXcd denom = g.blockC() * z + g.blockD();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(denom);
    if (!lu.isInvertible())
        throw std::domain_error("mobius_action: C z + D is singular");
    return (g.blockA() * z + g.blockB()) * lu.inverse();
}

DomainPoint mobius_action(const GroupElement& g, const DomainPoint& z) {
    return DomainPoint{mobius_action(g, z.z)};
}

HarishChandraFactor harish_chandra_factor(const GroupElement& g, const Eigen::MatrixXcd& z) {
    // g exp(z) has blocks (A, Az+B; C, Cz+D); factor it as in the block
    // identity P+ K P- with K = diag(A' - B'D'^{-1}C', D').
    const Eigen::MatrixXcd upper = g.blockA() * z + g.blockB();
    const Eigen::MatrixXcd lower = g.blockC() * z + g.blockD();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(lower);
    if (!lu.isInvertible())
        throw std::domain_error("harish_chandra_factor: singular lower block");
    const Eigen::MatrixXcd lower_inv = lu.inverse();
    HarishChandraFactor f;
    f.pplus = upper * lower_inv;
    f.k_upper = g.blockA() - f.pplus * g.blockC();
    f.k_lower = lower;
    f.pminus = lower_inv * g.blockC();
    return f;
}

std::complex<double> jacobian(const GroupElement& g, const Eigen::MatrixXcd& z) {
    const HarishChandraFactor f = harish_chandra_factor(g, z);
    const std::complex<double> detM = f.k_upper.determinant();
    const std::complex<double> detNinv = f.k_lower.determinant();
    return std::pow(detM, g.m) / std::pow(detNinv, g.n);
}

std::complex<double> kernel_h(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w) {
    const int n = static_cast<int>(z.rows());
    return (Eigen::MatrixXcd::Identity(n, n) - z * w.adjoint()).determinant();
}

std::complex<double> bergman_kernel(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w) {
    const int n = static_cast<int>(z.rows());
    const int m = static_cast<int>(z.cols());
    return std::pow(kernel_h(z, w), -(n + m));
}

GroupElement sample_group(int n, int m, GroupKind kind, double scale, std::uint64_t seed) {
    CounterRng rng(seed, 0x67656f6dull);
    const int d = n + m;
    Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(d, d);
    if (kind == GroupKind::SU) {
        // A, D skew-Hermitian with tr A + tr D = 0; C = B*
        Eigen::MatrixXcd A(n, n), D(m, m), B(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                const std::complex<double> v(rng.next_gaussian(), rng.next_gaussian());
                A(i, j) = v;
                A(j, i) = -std::conj(v);
            }
        for (int i = 0; i < n; ++i) A(i, i) = std::complex<double>(0.0, rng.next_gaussian());
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j) {
                const std::complex<double> v(rng.next_gaussian(), rng.next_gaussian());
                D(i, j) = v;
                D(j, i) = -std::conj(v);
            }
        for (int i = 0; i < m; ++i) D(i, i) = std::complex<double>(0.0, rng.next_gaussian());
        // restore tracelessness on the last diagonal entry
        D(m - 1, m - 1) -= A.trace() + D.trace();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) B(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
        X.topLeftCorner(n, n) = A;
        X.bottomRightCorner(m, m) = D;
        X.topRightCorner(n, m) = B;
        X.bottomLeftCorner(m, n) = B.adjoint();
    } else {
        // real: A, D skew-symmetric, C = B^t; trace vanishes automatically
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n), D = Eigen::MatrixXd::Zero(m, m), B(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                const double v = rng.next_gaussian();
                A(i, j) = v;
                A(j, i) = -v;
            }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j) {
                const double v = rng.next_gaussian();
                D(i, j) = v;
                D(j, i) = -v;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) B(i, j) = rng.next_gaussian();
        Eigen::MatrixXd Xr = Eigen::MatrixXd::Zero(d, d);
        Xr.topLeftCorner(n, n) = A;
        Xr.bottomRightCorner(m, m) = D;
        Xr.topRightCorner(n, m) = B;
        Xr.bottomLeftCorner(m, n) = B.transpose();
        X = Xr.cast<std::complex<double>>();
    }
    // scale is a hard bound on the spectral norm of the algebra element
    double opnorm = 0.0;
    if (scale != 0.0) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(X);
        opnorm = svd.singularValues()(0);
    }
    const double factor = (opnorm > 1.0) ? scale / opnorm : scale;
    GroupElement out;
    out.n = n;
    out.m = m;
    out.g = (factor * X).exp();
    return out;
}

StiefelPoint sample_stiefel(int n, int m, std::uint64_t seed) {
    if (n < m) throw std::invalid_argument("sample_stiefel: require n >= m");
    CounterRng rng(seed, 0x73746965ull);
    Eigen::MatrixXd G(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) G(i, j) = rng.next_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
    Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
    const Eigen::MatrixXd R = qr.matrixQR().topLeftCorner(m, m);
    for (int j = 0; j < m; ++j)
        if (R(j, j) < 0.0) Q.col(j) *= -1.0;
    return StiefelPoint{std::move(Q)};
}

Rational sphere_moment(int n, int j) {
    if (n < 2) throw std::invalid_argument("sphere_moment: require n >= 2");
    if (j < 0) throw std::invalid_argument("sphere_moment: require j >= 0");
    if (j % 2 == 1) return Rational(0);
    const int k = j / 2;
    return pochhammer(Rational(1, 2), k) / pochhammer(Rational(n, 2), k);
}

Rational expansion_coeff(int n, int k) {
    if (n < 1) throw std::invalid_argument("expansion_coeff: require n >= 1");
    return pochhammer(Rational(1, 2), k) /
           (pochhammer(Rational(n, 2), k) * Rational(factorial(2 * k)));
}

double t1_series(int n, int m, const Eigen::MatrixXd& z, int k_max) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(z);
    std::vector<double> sv(svd.singularValues().data(), svd.singularValues().data() + m);
    double total = 0.0;
    for (int k = 0; k <= k_max; ++k)
        total += to_double(expansion_coeff(n, k)) * evaluate(build_psi(m, k), sv);
    return total;
}

McResult mc_T1(int n, int m, const Eigen::MatrixXd& z, std::int64_t samples, std::uint64_t seed) {
    if (z.rows() != n || z.cols() != m) throw std::invalid_argument("mc_T1: z must be n x m");
    if (!DomainPoint{z.cast<std::complex<double>>()}.is_valid())
        throw std::invalid_argument("mc_T1: z must lie strictly inside the domain");
    // det(I_n - z v^t) = det(I_m - v^t z): the m x m determinant is all we need
    double sum = 0.0, sum_sq = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const StiefelPoint v = sample_stiefel(n, m, seed + static_cast<std::uint64_t>(i));
        const Eigen::MatrixXd small = Eigen::MatrixXd::Identity(m, m) - v.v.transpose() * z;
        const double val = 1.0 / small.determinant();
        sum += val;
        sum_sq += val * val;
    }
    McResult r;
    r.samples = samples;
    r.seed = seed;
    r.estimate = sum / static_cast<double>(samples);
    const double var = (sum_sq / static_cast<double>(samples)) - r.estimate * r.estimate;
    r.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    return r;
}

Rational t1_alpha_sq(int n, int m, int k) {
    return pochhammer(Rational(m, 2), k) / pochhammer(Rational(n, 2), k);
}

Rational t1_tail_exact(int n, int m, int K) {
    if (n - m <= 2) throw std::domain_error("t1_tail_exact: requires n - m > 2");
    return t1_alpha_sq(n, m, K) * (Rational(K) + Rational(n, 2) - 1) /
           (Rational(n - m, 2) - 1);
}

T1NormSq t1_norm_sq(int n, int m, int k_max) {
    if (n < m || m < 1) throw std::invalid_argument("t1_norm_sq: require n >= m >= 1");
    T1NormSq out;
    out.converges = (n - m) > 2;
    if (out.converges) out.limit = Rational(n - 2, n - m - 2);
    out.partial_sums.reserve(static_cast<size_t>(k_max) + 1);
    double sum = 0.0, term = 1.0;  // alpha_0^2 = 1
    for (int k = 0; k <= k_max; ++k) {
        sum += term;
        out.partial_sums.push_back(sum);
        term *= (k + 0.5 * m) / (k + 0.5 * n);
    }
    return out;
}

StructureConstants structure_constants(int n, int m) {
    if (n < m || m < 1) throw std::invalid_argument("structure_constants: require n >= m >= 1");
    StructureConstants s;
    s.rho0_slope = Rational(m) * (n - 1);
    s.density_exponent = Rational(n - 1, n + m);
    s.tau_exponent = Rational(n - 2, n + m);
    s.a0_jacobian_exponent = Rational(-(n + m));
    return s;
}

CasimirCheck casimir_discrete_check(int n, int m) {
    if (n - m <= 2)
        throw std::domain_error("casimir_discrete_check: no discrete point unless n - m > 2");
    const Rational a = Rational(m - 1, 2) + Rational(n - m, 4);
    const Rational c = Rational(1, 2) - Rational(n - m, 4);
    CasimirCheck check;
    check.lhs = -(pow_int(a, 2) - pow_int(c, 2));
    check.rhs = -Rational(m * (n - 2), 4);
    check.equal = (check.lhs == check.rhs);
    return check;
}

GroupElement a0_element(int n, int m, double t) {
    GroupElement g;
    g.n = n;
    g.m = m;
    g.g = Eigen::MatrixXcd::Identity(n + m, n + m);
    for (int j = 0; j < m; ++j) {
        g.g(j, j) = std::cosh(t);
        g.g(n + j, n + j) = std::cosh(t);
        g.g(j, n + j) = std::sinh(t);
        g.g(n + j, j) = std::sinh(t);
    }
    return g;
}

Eigen::MatrixXcd boundary_point(int n, int m) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(n, m);
    for (int j = 0; j < m; ++j) z(j, j) = 1.0;
    return z;
}

namespace {

Eigen::MatrixXcd random_domain_matrix(int n, int m, CounterRng& rng, double radius) {
    Eigen::MatrixXcd g(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            g(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
    return g * (radius / svd.singularValues()(0));
}

}  // namespace

GroupVerifyReport verify_group(int n, int m, int trials, double tol, std::uint64_t seed) {
    GroupVerifyReport r;
    r.n = n;
    r.m = m;
    r.trials = trials;
    r.tol = tol;
    r.seed = seed;
    CounterRng rng(seed, 0x67727370ull);
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t base = seed + 7919ull * static_cast<std::uint64_t>(trial);
        const GroupElement g1 = sample_group(n, m, GroupKind::SU, 0.3, base + 1);
        const GroupElement g2 = sample_group(n, m, GroupKind::SO, 0.3, base + 2);
        GroupElement g12;
        g12.n = n;
        g12.m = m;
        g12.g = g1.g * g2.g;
        const Eigen::MatrixXcd z = random_domain_matrix(n, m, rng, 0.5);
        const Eigen::MatrixXcd w = random_domain_matrix(n, m, rng, 0.5);

        const Eigen::MatrixXcd compose_lhs = mobius_action(g12, z);
        const Eigen::MatrixXcd compose_rhs = mobius_action(g1, mobius_action(g2, z));
        r.max_composition_dev = std::max(
            r.max_composition_dev, (compose_lhs - compose_rhs).cwiseAbs().maxCoeff());

        const std::complex<double> chain_lhs = jacobian(g12, z);
        const std::complex<double> chain_rhs = jacobian(g1, mobius_action(g2, z)) * jacobian(g2, z);
        r.max_chain_rule_dev =
            std::max(r.max_chain_rule_dev, std::abs(chain_lhs - chain_rhs) / std::abs(chain_lhs));

        const std::complex<double> bergman_lhs =
            bergman_kernel(mobius_action(g1, z), mobius_action(g1, w));
        const std::complex<double> bergman_rhs =
            bergman_kernel(z, w) / (jacobian(g1, z) * std::conj(jacobian(g1, w)));
        r.max_bergman_dev = std::max(r.max_bergman_dev,
                                     std::abs(bergman_lhs - bergman_rhs) / std::abs(bergman_lhs));

        const double t = 0.05 + 0.4 * rng.next_double();
        const std::complex<double> J = jacobian(a0_element(n, m, t), boundary_point(n, m));
        const double expected = std::exp(-(n + m) * m * t);
        r.max_a0_jacobian_dev =
            std::max(r.max_a0_jacobian_dev, std::abs(J - expected) / expected);
    }
    r.pass = r.max_composition_dev <= tol && r.max_chain_rule_dev <= tol &&
             r.max_bergman_dev <= tol && r.max_a0_jacobian_dev <= tol;
    return r;
}

ExpansionVerifyReport verify_expansion(int n, int m, std::int64_t samples, std::uint64_t seed) {
    ExpansionVerifyReport r;
    r.n = n;
    r.m = m;
    r.samples = samples;
    r.seed = seed;
    r.converges = (n - m) > 2;

    if (r.converges) {
        Rational partial = 0;
        bool ok = true;
        for (int K = 1; K <= 30; ++K) {
            partial += t1_alpha_sq(n, m, K - 1);
            ok = ok && (partial + t1_tail_exact(n, m, K) == Rational(n - 2, n - m - 2));
        }
        r.norm_identity_ok = ok;
        const CasimirCheck cas = casimir_discrete_check(n, m);
        r.casimir_ok = cas.equal;
    } else {
        // divergence signature: the sums still grow between k = 2000 and
        // k = 20000 (convergent cases have tails below 0.03 there, divergent
        // ones gain at least (m/2) log 10 > 1)
        const T1NormSq sums = t1_norm_sq(n, m, 20000);
        const double growth = sums.partial_sums.back() - sums.partial_sums[2000];
        r.norm_identity_ok = growth > 0.1;
        r.casimir_ok = true;
    }

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int k = 50; k <= 200; ++k) {
        const double x = std::log(static_cast<double>(k));
        const double y = std::log(to_double(t1_alpha_sq(n, m, k)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    r.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    r.slope_target = -0.5 * (n - m);
    r.slope_ok = std::abs(r.slope - r.slope_target) < 0.1;

    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, m);
    for (int j = 0; j < m; ++j) z(j, j) = 1.0 / (2.0 + j);
    const McResult mc = mc_T1(n, m, z, samples, seed);
    r.mc_estimate = mc.estimate;
    r.mc_std_error = mc.std_error;
    r.series_value = t1_series(n, m, z, 10);
    r.mc_ok = std::abs(mc.estimate - r.series_value) <= 3.0 * mc.std_error;

    r.pass = r.norm_identity_ok && r.slope_ok && r.mc_ok && r.casimir_ok;
    return r;
}

}  // namespace branchlaw
