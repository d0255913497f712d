// The radial operator 4 L^1 = L_- + L_0 + L_+ acting exactly on even
// symmetric polynomials, and its three-term (Jacobi) coefficients on the
// family {psi_k}.
#pragma once

#include "branchlaw/sym_poly.hpp"

#include <string>
#include <vector>

namespace branchlaw {

// Jacobi coefficients of the radial operator (A, B, C) together with the
// recursion constants of the underlying dual Hahn family (Ap, Bp, Cp).
// Invariants: C == 1/4, Bp == -(Ap + Cp), B == Bp, and
// A_{k+1} C_k == Ap_{k+1} Cp_k.
struct JacobiCoeffs {
    Rational A, B, C;     // L^1 psi_k = A psi_{k-1} + B psi_k + C psi_{k+1}
    Rational Ap, Bp, Cp;  // -(a^2+y) St_k = Ap St_{k-1} + Bp St_k + Cp St_{k+1}
};

JacobiCoeffs jacobi_coeffs(int n, int m, int k);

// A_k in the factored form 4 k^2 (k-1+n/2) (k-1+m/2); agrees with
// JacobiCoeffs::A, which is assembled from the expanded quartic.
Rational jacobi_A_factored(int n, int m, int k);

// Degree-lowering part: sum_i (d^2/dx_i^2 + (n-m)/x_i d/dx_i)
//   + 2 sum_{i>j} (x_i d_i - x_j d_j)/(x_i^2 - x_j^2).
// The cross terms are applied through their geometric-sum closed form on
// orbit pairs, so the result is always a polynomial.
EvenSymPoly apply_L_minus(const EvenSymPoly& p, int n);

// Degree-preserving part (carries the constant -mn).
EvenSymPoly apply_L_zero(const EvenSymPoly& p, int n);

// Degree-raising part.
EvenSymPoly apply_L_plus(const EvenSymPoly& p, int n);

// (L_- + L_0 + L_+)/4.
EvenSymPoly apply_L1(const EvenSymPoly& p, int n);

struct RecurrenceReport {
    struct Entry {
        int k = 0;
        bool pass = false;
        std::string detail;  // first differing orbit coefficient on failure
    };
    int n = 0, m = 0;
    std::vector<Entry> results;

    bool all_pass() const {
        for (const auto& e : results)
            if (!e.pass) return false;
        return true;
    }
};

// Asserts L^1 psi_k == A_k psi_{k-1} + B_k psi_k + C_k psi_{k+1} as an
// exact polynomial identity for each k <= k_max.
RecurrenceReport verify_recurrence(int n, int m, int k_max);

}  // namespace branchlaw
