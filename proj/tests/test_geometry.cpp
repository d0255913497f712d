#include "branchlaw/geometry.hpp"
#include "branchlaw/rng.hpp"
#include "branchlaw/serialize.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace branchlaw;

namespace {

Eigen::MatrixXcd random_domain_matrix(int n, int m, std::uint64_t seed, double radius = 0.5) {
    CounterRng rng(seed, 0x7a657261ull);
    Eigen::MatrixXcd g(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            g(i, j) = std::complex<double>(rng.next_gaussian(), rng.next_gaussian());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
    return g * (radius / svd.singularValues()(0));
}

GroupElement multiply(const GroupElement& g1, const GroupElement& g2) {
    GroupElement out;
    out.n = g1.n;
    out.m = g1.m;
    out.g = g1.g * g2.g;
    return out;
}

// 99% chi-squared quantile (Wilson-Hilferty approximation).
double chi2_q99(int df) {
    const double z = 2.3263478740408408;
    const double t = 1.0 - 2.0 / (9.0 * df) + z * std::sqrt(2.0 / (9.0 * df));
    return df * t * t * t;
}

}  // namespace

TEST_CASE("domain point invariant") {
    const DomainPoint inside{random_domain_matrix(4, 2, 1)};
    CHECK(inside.is_valid());
    Eigen::MatrixXcd far = Eigen::MatrixXcd::Zero(4, 2);
    far(0, 0) = 1.5;
    CHECK_FALSE(DomainPoint{far}.is_valid());
}

TEST_CASE("mobius action basics") {
    const int n = 4, m = 2;
    GroupElement id;
    id.n = n;
    id.m = m;
    id.g = Eigen::MatrixXcd::Identity(n + m, n + m);
    const Eigen::MatrixXcd z = random_domain_matrix(n, m, 2);
    CHECK((mobius_action(id, z) - z).cwiseAbs().maxCoeff() < 1e-14);

    // block-diagonal elements fix the origin
    const GroupElement k = sample_group(n, m, GroupKind::SU, 0.0, 3);
    CHECK((mobius_action(k, Eigen::MatrixXcd::Zero(n, m))).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("group action composes: (g1 g2)(z) = g1(g2(z))") {
    for (const auto& [n, m] : {std::pair{3, 1}, {4, 2}, {5, 2}}) {
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            const GroupElement g1 = sample_group(n, m, GroupKind::SU, 0.3, 100 + trial);
            const GroupElement g2 = sample_group(n, m, GroupKind::SO, 0.3, 200 + trial);
            const Eigen::MatrixXcd z = random_domain_matrix(n, m, 300 + trial);
            const Eigen::MatrixXcd lhs = mobius_action(multiply(g1, g2), z);
            const Eigen::MatrixXcd rhs = mobius_action(g1, mobius_action(g2, z));
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
            CHECK(DomainPoint{lhs}.is_valid(1e-9));
        }
    }
}

TEST_CASE("harish-chandra factorisation") {
    const int n = 4, m = 2;
    GroupElement id;
    id.n = n;
    id.m = m;
    id.g = Eigen::MatrixXcd::Identity(n + m, n + m);
    const Eigen::MatrixXcd z = random_domain_matrix(n, m, 5);
    const HarishChandraFactor f = harish_chandra_factor(id, z);
    CHECK((f.pplus - z).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((f.k_upper - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((f.k_lower - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-14);

    // reconstruction: P+ K P- multiplies back to g exp(z)
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const GroupElement g = sample_group(n, m, GroupKind::SU, 0.4, 400 + trial);
        const Eigen::MatrixXcd w = random_domain_matrix(n, m, 500 + trial);
        const HarishChandraFactor hc = harish_chandra_factor(g, w);
        Eigen::MatrixXcd pplus = Eigen::MatrixXcd::Identity(n + m, n + m);
        pplus.topRightCorner(n, m) = hc.pplus;
        Eigen::MatrixXcd kc = Eigen::MatrixXcd::Zero(n + m, n + m);
        kc.topLeftCorner(n, n) = hc.k_upper;
        kc.bottomRightCorner(m, m) = hc.k_lower;
        Eigen::MatrixXcd pminus = Eigen::MatrixXcd::Identity(n + m, n + m);
        pminus.bottomLeftCorner(m, n) = hc.pminus;
        Eigen::MatrixXcd expw = Eigen::MatrixXcd::Identity(n + m, n + m);
        expw.topRightCorner(n, m) = w;
        CHECK((pplus * kc * pminus - g.g * expw).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("nilpotent elements act with trivial K-component at the base point") {
    // exp X_q with q m x m skew fixes e_1+...+e_m with K-component I
    const int n = 4, m = 2;
    const double s = 0.7;
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(m, m);
    q(0, 1) = s;
    q(1, 0) = -s;
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n + m, n + m);
    X.topLeftCorner(m, m) = -q;
    X.block(0, n, m, m) = q;
    X.block(n, 0, m, m) = -q;
    X.bottomRightCorner(m, m) = q;
    GroupElement g;
    g.n = n;
    g.m = m;
    g.g = (X + Eigen::MatrixXd::Identity(n + m, n + m)).cast<std::complex<double>>();
    // X is nilpotent of order 2, so exp X = I + X
    CHECK(g.form_defect() < 1e-12);
    const HarishChandraFactor f = harish_chandra_factor(g, boundary_point(n, m));
    CHECK((f.k_upper - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((f.k_lower - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(jacobian(g, boundary_point(n, m)) - 1.0) < 1e-12);
}

TEST_CASE("horospherical elements also have unit Jacobian at the base point") {
    // X_z with z (n-m) x m mixes the middle block; exp X_z = I + X_z + X_z^2/2
    const int n = 5, m = 2;
    CounterRng rng(41, 0);
    Eigen::MatrixXd zb(n - m, m);
    for (int i = 0; i < n - m; ++i)
        for (int j = 0; j < m; ++j) zb(i, j) = rng.next_gaussian();
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n + m, n + m);
    X.block(0, m, m, n - m) = zb.transpose();
    X.block(m, 0, n - m, m) = -zb;
    X.block(m, n, n - m, m) = zb;
    X.block(n, m, m, n - m) = zb.transpose();
    Eigen::MatrixXd g_real = Eigen::MatrixXd::Identity(n + m, n + m) + X + 0.5 * X * X;
    CHECK((X * X * X).cwiseAbs().maxCoeff() < 1e-14);  // nilpotent of order 3
    GroupElement g;
    g.n = n;
    g.m = m;
    g.g = g_real.cast<std::complex<double>>();
    CHECK(g.form_defect() < 1e-12);
    const HarishChandraFactor f = harish_chandra_factor(g, boundary_point(n, m));
    CHECK((f.k_lower - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(f.k_upper.determinant() - 1.0) < 1e-12);
    CHECK(std::abs(jacobian(g, boundary_point(n, m)) - 1.0) < 1e-12);
}

TEST_CASE("differential formula against finite differences") {
    // dg(z)Y = (A - g(z)C) Y (Cz + D)^{-1}
    const int n = 4, m = 2;
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        const GroupElement g = sample_group(n, m, GroupKind::SU, 0.3, 1500 + trial);
        const Eigen::MatrixXcd z = random_domain_matrix(n, m, 1600 + trial);
        const Eigen::MatrixXcd Y = random_domain_matrix(n, m, 1700 + trial, 1.0);
        const HarishChandraFactor f = harish_chandra_factor(g, z);
        const Eigen::MatrixXcd exact = f.k_upper * Y * f.k_lower.inverse();
        const double eps = 1e-7;
        const Eigen::MatrixXcd fd =
            (mobius_action(g, z + eps * Y) - mobius_action(g, z)) / eps;
        CHECK((exact - fd).cwiseAbs().maxCoeff() < 1e-5);
    }
}

TEST_CASE("jacobian of the identity and the diagonal subgroup") {
    for (const auto& [n, m] : {std::pair{3, 1}, {4, 2}, {5, 2}}) {
        GroupElement id;
        id.n = n;
        id.m = m;
        id.g = Eigen::MatrixXcd::Identity(n + m, n + m);
        CHECK(std::abs(jacobian(id, random_domain_matrix(n, m, 7)) - 1.0) < 1e-12);

        for (double t : {0.1, 0.35}) {
            const GroupElement a = a0_element(n, m, t);
            CHECK(a.form_defect() < 1e-12);
            const std::complex<double> J = jacobian(a, boundary_point(n, m));
            const double expected = std::exp(-(n + m) * m * t);
            CHECK(std::abs(J - expected) < 1e-9 * expected);
        }
    }
}

TEST_CASE("jacobian chain rule") {
    for (const auto& [n, m] : {std::pair{3, 1}, {4, 2}, {5, 2}}) {
        for (std::uint64_t trial = 0; trial < 20; ++trial) {
            const GroupElement g1 = sample_group(n, m, GroupKind::SO, 0.3, 600 + trial);
            const GroupElement g2 = sample_group(n, m, GroupKind::SU, 0.3, 700 + trial);
            const Eigen::MatrixXcd z = random_domain_matrix(n, m, 800 + trial);
            const std::complex<double> lhs = jacobian(multiply(g1, g2), z);
            const std::complex<double> rhs = jacobian(g1, mobius_action(g2, z)) * jacobian(g2, z);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
        }
    }
}

TEST_CASE("kernel h and the Bergman transformation identity") {
    const int n = 4, m = 2;
    CHECK(std::abs(kernel_h(Eigen::MatrixXcd::Zero(n, m), Eigen::MatrixXcd::Zero(n, m)) - 1.0) <
          1e-15);
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const Eigen::MatrixXcd z = random_domain_matrix(n, m, 900 + trial);
        const std::complex<double> hzz = kernel_h(z, z);
        CHECK(std::abs(hzz.imag()) < 1e-12);
        CHECK(hzz.real() > 0.0);
        CHECK(hzz.real() <= 1.0 + 1e-12);

        const GroupElement g = sample_group(n, m, GroupKind::SU, 0.25, 1000 + trial);
        const Eigen::MatrixXcd w = random_domain_matrix(n, m, 1100 + trial);
        const std::complex<double> lhs = bergman_kernel(mobius_action(g, z), mobius_action(g, w));
        const std::complex<double> rhs =
            bergman_kernel(z, w) / (jacobian(g, z) * std::conj(jacobian(g, w)));
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    }
}

TEST_CASE("group sampling invariants") {
    const GroupElement id = sample_group(4, 2, GroupKind::SU, 0.0, 1);
    CHECK((id.g - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-15);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const GroupElement gu = sample_group(4, 2, GroupKind::SU, 0.4, 40 + s);
        CHECK(gu.form_defect() < 1e-10);
        CHECK(std::abs(gu.g.determinant() - 1.0) < 1e-10);
        const GroupElement go = sample_group(4, 2, GroupKind::SO, 0.4, 50 + s);
        CHECK(go.form_defect() < 1e-10);
        CHECK(std::abs(go.g.determinant() - 1.0) < 1e-10);
        CHECK(go.is_real());
    }
}

TEST_CASE("stiefel sampling frame property") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const StiefelPoint v = sample_stiefel(5, 2, s);
        CHECK(v.frame_defect() < 1e-12);
    }
    CHECK_THROWS_AS(sample_stiefel(2, 3, 0), std::invalid_argument);
}

TEST_CASE("first-column pushforward is uniform on the sphere (chi^2 at 99%)") {
    const int n = 5, m = 2;
    const int N = 40000;
    std::vector<int> positive(n, 0);
    for (int i = 0; i < N; ++i) {
        const StiefelPoint v = sample_stiefel(n, m, 7000 + static_cast<std::uint64_t>(i));
        for (int r = 0; r < n; ++r)
            if (v.v(r, 0) > 0.0) ++positive[static_cast<size_t>(r)];
    }
    double chi2 = 0.0;
    for (int r = 0; r < n; ++r) {
        const double d = 2.0 * positive[static_cast<size_t>(r)] - N;
        chi2 += d * d / N;
    }
    CHECK(chi2 < chi2_q99(n));
}

TEST_CASE("pushforward second and fourth moments match sphere moments") {
    const int n = 5, m = 2;
    const int N = 60000;
    double s2 = 0.0, s4 = 0.0;
    for (int i = 0; i < N; ++i) {
        const StiefelPoint v = sample_stiefel(n, m, 9000 + static_cast<std::uint64_t>(i));
        const double u = v.v(0, 0);
        s2 += u * u;
        s4 += u * u * u * u;
    }
    s2 /= N;
    s4 /= N;
    // E[u^2] = 1/5, E[u^4] = 3/35; allow 5 sigma
    CHECK(std::abs(s2 - to_double(sphere_moment(n, 2))) < 5.0 * std::sqrt(0.05 / N));
    CHECK(std::abs(s4 - to_double(sphere_moment(n, 4))) < 5.0 * std::sqrt(0.03 / N));
}

TEST_CASE("stiefel statistics are O(n) x O(m) invariant") {
    const int n = 5, m = 2, N = 30000;
    // fixed rotations from seeded Gaussians
    CounterRng rng(77, 1);
    Eigen::MatrixXd Gn(n, n), Gm(m, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Gn(i, j) = rng.next_gaussian();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) Gm(i, j) = rng.next_gaussian();
    const Eigen::MatrixXd Qn = Eigen::HouseholderQR<Eigen::MatrixXd>(Gn).householderQ();
    const Eigen::MatrixXd Qm = Eigen::HouseholderQR<Eigen::MatrixXd>(Gm).householderQ();

    auto stat = [](const Eigen::MatrixXd& v) { return v.array().pow(4).sum(); };
    double mean_plain = 0.0, mean_rotated = 0.0;
    for (int i = 0; i < N; ++i) {
        const StiefelPoint v = sample_stiefel(n, m, 11000 + static_cast<std::uint64_t>(i));
        mean_plain += stat(v.v);
        mean_rotated += stat(Qn * v.v * Qm.transpose());
    }
    mean_plain /= N;
    mean_rotated /= N;
    CHECK(std::abs(mean_plain - mean_rotated) < 0.02 * mean_plain);
}

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(5, 1) == 0);
    CHECK(sphere_moment(5, 3) == 0);
    CHECK(sphere_moment(5, 2) == Rational(1, 5));
    CHECK(sphere_moment(3, 4) == Rational(1, 5));
    CHECK(sphere_moment(4, 0) == 1);
}

TEST_CASE("expansion coefficients") {
    CHECK(expansion_coeff(5, 0) == 1);
    CHECK(expansion_coeff(5, 1) == Rational(1, 10));
    // c_k = (1/2)_k / ((n/2)_k (2k)!)
    CHECK(expansion_coeff(6, 2) == pochhammer(Rational(1, 2), 2) /
                                       (pochhammer(Rational(3), 2) * Rational(24)));
}

TEST_CASE("t1 series frozen partial sums") {
    // m = 1, n = 5, z = (1/2) e_1, k <= 10: sum (1/2)_k/(5/2)_k 4^{-k}
    Eigen::MatrixXd z51 = Eigen::MatrixXd::Zero(5, 1);
    z51(0, 0) = 0.5;
    CHECK(t1_series(5, 1, z51, 10) == doctest::Approx(1.05624469941164).epsilon(1e-12));

    Eigen::MatrixXd z62 = Eigen::MatrixXd::Zero(6, 2);
    z62(0, 0) = 0.3;
    z62(1, 1) = 0.2;
    CHECK(t1_series(6, 2, z62, 10) == doctest::Approx(1.0224583056666258).epsilon(1e-12));
}

TEST_CASE("monte carlo T1 at z = 0 is exactly 1") {
    const McResult r = mc_T1(4, 2, Eigen::MatrixXd::Zero(4, 2), 100, 5);
    CHECK(r.estimate == 1.0);
    CHECK(r.std_error == 0.0);
}

TEST_CASE("monte carlo T1 matches the truncated series within 3 sigma") {
    Eigen::MatrixXd z51 = Eigen::MatrixXd::Zero(5, 1);
    z51(0, 0) = 0.5;
    const McResult r51 = mc_T1(5, 1, z51, 200000, 12345);
    CHECK(std::abs(r51.estimate - t1_series(5, 1, z51, 10)) < 3.0 * r51.std_error);

    Eigen::MatrixXd z62 = Eigen::MatrixXd::Zero(6, 2);
    z62(0, 0) = 0.3;
    z62(1, 1) = 0.2;
    const McResult r62 = mc_T1(6, 2, z62, 200000, 54321);
    CHECK(std::abs(r62.estimate - t1_series(6, 2, z62, 10)) < 3.0 * r62.std_error);

    const Json j = to_json(r51);
    CHECK(j.at("N") == 200000);
    CHECK(j.at("seed") == 12345);
}

TEST_CASE("fibration witness: rank-one probe sees only the sphere pushforward") {
    // for z = lambda e_1 the integrand depends on v through v_11 alone, so
    // the m = 2 Monte Carlo must reproduce the same moment series as m = 1
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(5, 2);
    z(0, 0) = 0.5;
    const McResult r = mc_T1(5, 2, z, 150000, 777);
    double series = 0.0;
    for (int k = 0; k <= 10; ++k)
        series += to_double(sphere_moment(5, 2 * k)) * std::pow(0.25, k);
    CHECK(std::abs(r.estimate - series) < 3.0 * r.std_error);
}

TEST_CASE("kernel transformation rule at exponent one, real data") {
    // h(gz, gw)^{-1} = J_g(z)^{-1/(n+m)} h(z,w)^{-1} J_g(w)^{-1/(n+m)} with
    // every factor real and positive for real group elements at real points
    const int n = 4, m = 2;
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        const GroupElement g = sample_group(n, m, GroupKind::SO, 0.3, 2000 + trial);
        const Eigen::MatrixXcd z = random_domain_matrix(n, m, 2100 + trial).real().cast<std::complex<double>>();
        const Eigen::MatrixXcd w = random_domain_matrix(n, m, 2200 + trial).real().cast<std::complex<double>>();
        const std::complex<double> jz = jacobian(g, z);
        const std::complex<double> jw = jacobian(g, w);
        REQUIRE(std::abs(jz.imag()) < 1e-12 * std::abs(jz));
        REQUIRE(jz.real() > 0.0);
        const double h_before = kernel_h(z, w).real();
        const double h_after = kernel_h(mobius_action(g, z), mobius_action(g, w)).real();
        REQUIRE(h_before > 0.0);
        const double lhs = 1.0 / h_after;
        const double rhs = std::pow(jz.real(), -1.0 / (n + m)) * (1.0 / h_before) *
                           std::pow(jw.real(), -1.0 / (n + m));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("monte carlo rejects boundary points") {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(4, 2);
    z(0, 0) = 1.0;
    z(1, 1) = 1.0;
    CHECK_THROWS_AS(mc_T1(4, 2, z, 10, 1), std::invalid_argument);
}

TEST_CASE("t1 norm: exact limit, exact tail, monotone partial sums") {
    const T1NormSq r51 = t1_norm_sq(5, 1, 400);
    CHECK(r51.converges);
    CHECK(r51.limit == Rational(3, 2));
    const T1NormSq r82 = t1_norm_sq(8, 2, 400);
    CHECK(r82.limit == Rational(3, 2));
    for (size_t k = 1; k < r51.partial_sums.size(); ++k)
        CHECK(r51.partial_sums[k] > r51.partial_sums[k - 1]);
    CHECK(r51.partial_sums.back() < 1.5);

    // exact rational tail identity: S_{K-1} + tail(K) = limit
    for (const auto& [n, m] : {std::pair{5, 1}, {6, 2}, {8, 2}, {7, 3}}) {
        if (n - m <= 2) continue;
        Rational partial = 0;
        for (int K = 1; K <= 30; ++K) {
            partial += t1_alpha_sq(n, m, K - 1);
            CHECK(partial + t1_tail_exact(n, m, K) == Rational(n - 2, n - m - 2));
        }
    }

    // divergence for n - m <= 2: (4,2) has alpha_k^2 = 1/(k+1)
    const T1NormSq r42 = t1_norm_sq(4, 2, 20000);
    CHECK_FALSE(r42.converges);
    CHECK(r42.partial_sums.back() > 5.0);
    for (int k = 0; k <= 10; ++k)
        CHECK(t1_alpha_sq(4, 2, k) == Rational(1, k + 1));
    CHECK_THROWS_AS(t1_tail_exact(4, 2, 3), std::domain_error);
}

TEST_CASE("log-log slope of alpha_k^2 over k in [50, 200]") {
    for (const auto& [n, m] : {std::pair{5, 1}, {6, 2}, {4, 2}, {7, 3}, {8, 2}}) {
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
        const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
        CHECK(std::abs(slope - (-(n - m) / 2.0)) < 0.1);
    }
}

TEST_CASE("structure constants") {
    const StructureConstants s51 = structure_constants(5, 1);
    CHECK(s51.rho0_slope == 4);
    CHECK(s51.density_exponent == Rational(2, 3));
    CHECK(s51.tau_exponent == Rational(1, 2));
    CHECK(s51.a0_jacobian_exponent == -6);

    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= m + 6; ++n) {
            const StructureConstants s = structure_constants(n, m);
            // 2 rho_0 = m(m-1) + m(n-m) at t = 1
            CHECK(s.rho0_slope == Rational(m * (m - 1) + m * (n - m)));
            // e^{-2 rho_0 t m-sum} = (e^{-(n+m) m t})^{(n-1)/(n+m)}
            CHECK(Rational(m) * (n - 1) ==
                  -s.a0_jacobian_exponent * Rational(m) * s.density_exponent);
        }
}

TEST_CASE("casimir discrete check") {
    const CasimirCheck c51 = casimir_discrete_check(5, 1);
    CHECK(c51.equal);
    CHECK(c51.lhs == Rational(-3, 4));
    const CasimirCheck c62 = casimir_discrete_check(6, 2);
    CHECK(c62.equal);
    CHECK(c62.lhs == -2);
    const CasimirCheck c73 = casimir_discrete_check(7, 3);
    CHECK(c73.equal);
    CHECK(c73.lhs == Rational(-15, 4));
    CHECK_THROWS_AS(casimir_discrete_check(4, 2), std::domain_error);
}
