// Continuous dual Hahn polynomials S_k(x^2; a, b, c) at the parameter slice
// a = (m-1)/2 + (n-m)/4, b = 1/2 + (n-m)/4, c = 1/2 - (n-m)/4, together with
// the normalised (tilde) and renormalised (alpha) families.
//
// Everything is expressed in the squared spectral variable y = x^2: the
// product (a+ix)_j (a-ix)_j equals prod_{l<j} ((a+l)^2 + y), which keeps the
// polynomial layer rational and makes the discrete points y = -(c+j)^2
// first-class.
#pragma once

#include "branchlaw/rational.hpp"

#include <vector>

namespace branchlaw {

struct HahnParams {
    int n = 0, m = 0;
    Rational a, b, c;
};

// y is the squared spectral variable: y = x^2 > 0 on the continuous branch,
// y = -(c+j)^2 at the discrete points.
struct SpectralValue {
    Rational y;
    bool discrete = false;

    static SpectralValue continuous(Rational y_pos);
    // the j-th point of the discrete spectrum; requires c + j < 0
    static SpectralValue discrete_point(const HahnParams& p, int j);
};

HahnParams hahn_params(int n, int m);

// S_k(y) by the terminating hypergeometric sum; exact for rational y.
Rational hahn_S(int k, const Rational& y, const HahnParams& p);
double hahn_S(int k, double y, const HahnParams& p);
Rational hahn_S(int k, const SpectralValue& y, const HahnParams& p);

// Ascending coefficient list of S_k in y (degree k, leading term (-1)^k).
std::vector<Rational> hahn_S_coeffs(int k, const HahnParams& p);

// Normalised family St_k = S_k / ((a+b)_k (a+c)_k).
Rational hahn_Stilde(int k, const Rational& y, const HahnParams& p);

// Solves -(a^2+y) St_k = Ap_k St_{k-1} + Bp_k St_k + Cp_k St_{k+1} for
// St_{k+1}.  st_km1 is ignored for k = 0.
Rational hahn_recurrence_next(int k, const Rational& y, const HahnParams& p,
                              const Rational& st_k, const Rational& st_km1);
double hahn_recurrence_next(int k, double y, const HahnParams& p, double st_k, double st_km1);

// Recursion constants of the tilde family, from the parameters directly:
// Ap = k(k+b+c-1), Cp = (k+a+b)(k+a+c), Bp = -(Ap+Cp).
Rational hahn_Ap(int k, const HahnParams& p);
Rational hahn_Bp(int k, const HahnParams& p);
Rational hahn_Cp(int k, const HahnParams& p);

// Renormalisation alpha_k = (Gamma(m/2) Gamma(n/2))^{-1/2} 4^k (m/2)_k (n/2)_k.
double alpha(int n, int m, int k);

// Gamma-free square: alpha_k^2 * Gamma(m/2) Gamma(n/2) = 4^{2k} ((m/2)_k (n/2)_k)^2.
Rational alpha_sq_gamma_free(int n, int m, int k);

// alpha_k / alpha_0 = 4^k (m/2)_k (n/2)_k (exact).
Rational alpha_ratio(int n, int m, int k);

// St^alpha_k(y) = alpha_k St_k(y), the T0-image of psi_k.
double stilde_alpha(int k, double y, const HahnParams& p);

// Gamma-free exact variant St^alpha_k / alpha_0 = alpha_ratio * St_k.
Rational stilde_alpha_ratio(int k, const Rational& y, const HahnParams& p);

}  // namespace branchlaw
