// The spectral measure mu on Sigma = (0, infinity) U {discrete points}:
// complex-gamma weight on the continuous branch, point masses at
// y_j = -(c+j)^2 whenever c + j < 0 (equivalently n - m > 2 for j = 0).
#pragma once

#include "branchlaw/gamma.hpp"
#include "branchlaw/hahn.hpp"
#include "branchlaw/quadrature.hpp"
#include "branchlaw/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace branchlaw {

struct Atom {
    int j = 0;
    Rational y;        // -(c+j)^2, exact
    double mass = 0.0; // > 0
    Rational casimir;  // multiplication symbol at the atom, -(a^2 - (c+j)^2)
};

struct MeasureOptions {
    double tail_tol = 1e-30;  // certified bound on the truncated tail
    int max_degree_y = 16;    // largest y-degree the truncation certifies
    QuadratureSpec quad{};
};

struct PlancherelMeasure {
    HahnParams params;
    std::vector<Atom> atoms;
    double x_max = 0.0;
    MeasureOptions options;
};

// Continuous weight (1/2pi) |Gamma(a+ix) Gamma(b+ix) Gamma(c+ix) / Gamma(2ix)|^2.
double density(double x, const HahnParams& p);

// Point masses; empty exactly when c >= 0.
std::vector<Atom> atoms(const HahnParams& p);

// Closed-form upper bound on the tail integral
// int_X^inf density(x) x^(2 degree_y) dx, valid for X >= 4.
double certified_tail_bound(const HahnParams& p, double X, int degree_y);

PlancherelMeasure make_measure(const HahnParams& p, const MeasureOptions& options = {});

// Integrates a function of the squared spectral variable y against mu:
// continuous part on (0, x_max] plus the atom sum.  The overload with an
// explicit QuadratureSpec serves integrands whose integral is near zero
// (orthogonality cross terms), where only an absolute target makes sense.
double integrate(const std::function<double(double)>& f_of_y, const PlancherelMeasure& mu);
double integrate(const std::function<double(double)>& f_of_y, const PlancherelMeasure& mu,
                 const QuadratureSpec& quad);

// int d(mu) = Gamma(n/2) Gamma(m/2); exposed for mass cross-checks.
double total_mass(const PlancherelMeasure& mu);
double continuous_mass(const PlancherelMeasure& mu);

// Multiplication-operator symbol -(a^2 + y).
double multiplication_symbol(double y, const HahnParams& p);
Rational multiplication_symbol(const Rational& y, const HahnParams& p);

struct OrthogonalityReport {
    int n = 0, m = 0, k_max = 0;
    double tol = 0.0;
    double max_diag_rel_err = 0.0;
    double max_offdiag_over_scale = 0.0;
    bool pass = false;
};

// Gram matrix of {S_k} under mu against the closed form
// Gamma(k+n/2) Gamma(k+m/2) (k!)^2 delta_kl.
OrthogonalityReport verify_orthogonality(int n, int m, int k_max, double tol,
                                         const MeasureOptions& options = {});

}  // namespace branchlaw
