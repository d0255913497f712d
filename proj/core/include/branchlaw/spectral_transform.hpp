// Numerical realisation of the unitary T0 between the invariant subspace
// (coordinates in the orthonormal basis {phi_k}) and L^2(Sigma, mu):
// phi_k corresponds to the unit vector u_k = St^alpha_k / ||psi_k||_1.
#pragma once

#include "branchlaw/plancherel.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace branchlaw {

struct CoefficientVector {
    int n = 0, m = 0;
    std::vector<double> coeffs;  // indexed by k

    double norm_sq() const {
        double s = 0.0;
        for (double c : coeffs) s += c * c;
        return s;
    }
};

struct SpectralFunction {
    std::function<double(double)> fn;  // of the squared spectral variable y
    int degree_y = -1;                 // polynomial degree when known
};

// Value of the orthonormal family member u_k at y.
double unit_vector_value(int k, double y, const HahnParams& p);

// Image of sum_k v_k phi_k under T0.
SpectralFunction transform(const CoefficientVector& v);

struct UnitarityReport {
    int n = 0, m = 0, k_max = 0;
    double tol = 0.0;
    double max_gram_deviation = 0.0;  // from the identity matrix
    bool pass = false;
};

UnitarityReport verify_unitarity(int n, int m, int k_max, double tol,
                                 const MeasureOptions& options = {});

// M_{l k} = int multiplication_symbol * u_k * u_l d(mu); tridiagonal with
// M_{k,k} = B_k and M_{k,k+1} = sqrt(A_{k+1} C_k).
Eigen::MatrixXd operator_matrix(int n, int m, int k_max, const MeasureOptions& options = {});

struct BranchingSummary {
    int n = 0, m = 0;
    HahnParams params;
    double continuous_total_mass = 0.0;  // mass of the band (0, infinity)
    double total_mass = 0.0;             // Gamma(n/2) Gamma(m/2)
    std::vector<Atom> discrete;          // one entry per point spectrum member
};

BranchingSummary branching_summary(int n, int m, const MeasureOptions& options = {});

}  // namespace branchlaw
