// Matrix models for the domain D = {z : I - z z* > 0}, the groups
// SU(n,m) / SO(n,m), the real Shilov boundary Y (orthonormal m-frames in
// R^n), Jacobian and kernel identities, and the Monte Carlo machinery for
// the boundary integral T1(z) = int_Y det(I - z v^t)^{-1} d(omega).
#pragma once

#include "branchlaw/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace branchlaw {

struct DomainPoint {
    Eigen::MatrixXcd z;  // n x m, with I - z z* positive definite

    int n() const { return static_cast<int>(z.rows()); }
    int m() const { return static_cast<int>(z.cols()); }
    // smallest eigenvalue of I - z z*
    double boundary_margin() const;
    bool is_valid(double floor = 1e-12) const { return boundary_margin() > floor; }
};

enum class GroupKind { SU, SO };

struct GroupElement {
    int n = 0, m = 0;
    Eigen::MatrixXcd g;  // (n+m) x (n+m), g* J g = J, det g = 1

    Eigen::MatrixXcd blockA() const { return g.topLeftCorner(n, n); }
    Eigen::MatrixXcd blockB() const { return g.topRightCorner(n, m); }
    Eigen::MatrixXcd blockC() const { return g.bottomLeftCorner(m, n); }
    Eigen::MatrixXcd blockD() const { return g.bottomRightCorner(m, m); }

    // max norm of g* J g - J
    double form_defect() const;
    bool is_real(double tol = 1e-12) const;
};

struct StiefelPoint {
    Eigen::MatrixXd v;  // n x m, v^t v = I_m

    double frame_defect() const {
        const int m = static_cast<int>(v.cols());
        return (v.transpose() * v - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
    }
};

// (A z + B)(C z + D)^{-1}.
DomainPoint mobius_action(const GroupElement& g, const DomainPoint& z);
Eigen::MatrixXcd mobius_action(const GroupElement& g, const Eigen::MatrixXcd& z);

struct HarishChandraFactor {
    Eigen::MatrixXcd pplus;    // P+ coordinate (A z + B)(C z + D)^{-1}
    Eigen::MatrixXcd k_upper;  // A - pplus * C  (n x n block of the K component)
    Eigen::MatrixXcd k_lower;  // C z + D        (m x m block of the K component)
    Eigen::MatrixXcd pminus;   // (C z + D)^{-1} C, lower-left block of the P- factor
};

// Factors g exp(z) through P+ K^C P-; throws on a singular lower block.
HarishChandraFactor harish_chandra_factor(const GroupElement& g, const Eigen::MatrixXcd& z);

// Complex Jacobian of the action at z: determinant of Y -> M Y N with
// M = A - g(z) C and N = (C z + D)^{-1}, i.e. det(M)^m det(N)^n.
std::complex<double> jacobian(const GroupElement& g, const Eigen::MatrixXcd& z);

// h(z, w) = det(I_n - z w*).
std::complex<double> kernel_h(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w);

// Bergman kernel h(z,w)^{-(n+m)}.
std::complex<double> bergman_kernel(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& w);

// exp(X) for a random X in su(n,m) (or so(n,m) for SO) with entries of the
// given scale; scale = 0 gives the identity.
GroupElement sample_group(int n, int m, GroupKind kind, double scale, std::uint64_t seed);

// Invariant measure on Y via thin QR of a Gaussian matrix, sign convention:
// positive diagonal of the triangular factor.
StiefelPoint sample_stiefel(int n, int m, std::uint64_t seed);

// int_{S^{n-1}} u_1^j d(sigma): zero for odd j, (1/2)_k / (n/2)_k for j = 2k.
Rational sphere_moment(int n, int j);

// Coefficient of psi_k in the expansion of T1: (1/2)_k / ((n/2)_k (2k)!).
Rational expansion_coeff(int n, int k);

// Truncated expansion sum_{k<=k_max} c_k psi_k(z) for real z strictly inside
// the domain; psi_k is evaluated on the singular values of z.
double t1_series(int n, int m, const Eigen::MatrixXd& z, int k_max);

struct McResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo mean of det(I - z v^t)^{-1} over the invariant measure on Y.
McResult mc_T1(int n, int m, const Eigen::MatrixXd& z, std::int64_t samples, std::uint64_t seed);

// alpha_k^2 = (m/2)_k / (n/2)_k: the squared phi_k-coefficients of T1.
Rational t1_alpha_sq(int n, int m, int k);

// Exact tail sum_{k >= K} alpha_k^2 = alpha_K^2 (K + n/2 - 1)/((n-m)/2 - 1),
// defined for n - m > 2.
Rational t1_tail_exact(int n, int m, int K);

struct T1NormSq {
    std::vector<double> partial_sums;  // S_K = sum_{k<=K} alpha_k^2
    bool converges = false;            // n - m > 2
    Rational limit;                    // (n-2)/(n-m-2) when convergent
};

T1NormSq t1_norm_sq(int n, int m, int k_max);

struct StructureConstants {
    Rational rho0_slope;            // 2 rho_0(t(E_1+...+E_m)) = m(n-1) t
    Rational density_exponent;      // (n-1)/(n+m)
    Rational tau_exponent;          // (n-2)/(n+m)
    Rational a0_jacobian_exponent;  // -(n+m) per unit sum t_j
};

StructureConstants structure_constants(int n, int m);

struct CasimirCheck {
    Rational lhs;  // -(a^2 - c^2) at the j = 0 atom
    Rational rhs;  // -m(n-2)/4
    bool equal = false;
};

// Defined only when a discrete point exists (n - m > 2).
CasimirCheck casimir_discrete_check(int n, int m);

// exp(t(E_1+...+E_m)): the diagonal one-parameter subgroup used in the
// boundary Jacobian identity J = e^{-(n+m) m t}.
GroupElement a0_element(int n, int m, double t);

// e_1 + ... + e_m, the base point of the real Shilov boundary.
Eigen::MatrixXcd boundary_point(int n, int m);

struct GroupVerifyReport {
    int n = 0, m = 0, trials = 0;
    double tol = 0.0;
    std::uint64_t seed = 0;
    double max_composition_dev = 0.0;   // (g1 g2)(z) vs g1(g2(z))
    double max_chain_rule_dev = 0.0;    // J_{g1 g2}(z) vs J_{g1}(g2 z) J_{g2}(z)
    double max_bergman_dev = 0.0;       // kernel transformation rule
    double max_a0_jacobian_dev = 0.0;   // J at the boundary vs e^{-(n+m) m t}
    bool pass = false;
};

GroupVerifyReport verify_group(int n, int m, int trials, double tol, std::uint64_t seed);

struct ExpansionVerifyReport {
    int n = 0, m = 0;
    bool converges = false;
    bool norm_identity_ok = false;  // exact limit-and-tail identity, or the
                                    // divergence lower bound when n-m <= 2
    double slope = 0.0;             // log-log slope of alpha_k^2, k in [50,200]
    double slope_target = 0.0;      // -(n-m)/2
    bool slope_ok = false;
    double mc_estimate = 0.0;
    double mc_std_error = 0.0;
    double series_value = 0.0;      // truncated expansion at the probe point
    bool mc_ok = false;             // agreement within 3 standard errors
    bool casimir_ok = false;        // exact atom/Casimir identity (vacuous
                                    // when no discrete point exists)
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

ExpansionVerifyReport verify_expansion(int n, int m, std::int64_t samples, std::uint64_t seed);

}  // namespace branchlaw
