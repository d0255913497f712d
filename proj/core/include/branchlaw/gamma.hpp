// Complex log-gamma via a 15-term Lanczos approximation (g = 607/128) with
// reflection for the left half-plane.  Relative accuracy of exp(log_gamma)
// is ~1e-14 on the strip 0 < Re z <= 10, |Im z| <= 50.
#pragma once

#include <complex>

namespace branchlaw {

// Throws std::domain_error at the poles (nonpositive real integers).
std::complex<double> log_gamma(std::complex<double> z);

// Real positive arguments only.
double log_gamma_real(double x);

}  // namespace branchlaw
