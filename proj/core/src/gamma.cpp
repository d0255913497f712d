#include "branchlaw/gamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace branchlaw {

namespace {

using Complex = std::complex<double>;

constexpr double kLanczosG = 607.0 / 128.0;

// Godfrey's coefficients for g = 607/128, n = 15.
constexpr double kLanczosCoeffs[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// Valid for Re z >= 0.5.
Complex log_gamma_lanczos(Complex z) {
    Complex sum(kLanczosCoeffs[0], 0.0);
    for (int k = 1; k < 15; ++k) sum += kLanczosCoeffs[k] / (z + static_cast<double>(k - 1));
    const Complex base = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(base) - base + 0.5 * std::log(2.0 * std::numbers::pi) +
           std::log(sum);
}

// log sin(pi z), stable for large |Im z| (factors out the growing
// exponential before taking the log).
Complex log_sin_pi(Complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    const Complex i(0.0, 1.0);
    const double pi = std::numbers::pi;
    // sin(pi z) = -(e^{-i pi z} / 2i) (1 - e^{2 i pi z}), |e^{2 i pi z}| <= 1
    return -i * pi * z - std::log(2.0 * i) + std::log(1.0 - std::exp(2.0 * i * pi * z));
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // one recurrence step keeps the right half-plane on the continuous branch
    if (z.real() > 0.0) return log_gamma_lanczos(z + 1.0) - std::log(z);
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).  The real part is
    // branch-free; the imaginary part is defined modulo 2 pi here.
    return std::log(std::numbers::pi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

double log_gamma_real(double x) {
    if (x <= 0.0) throw std::domain_error("log_gamma_real: argument must be positive");
    return std::lgamma(x);
}

}  // namespace branchlaw
