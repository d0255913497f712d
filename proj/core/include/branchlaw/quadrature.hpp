// Adaptive Gauss-Kronrod (G7,K15) panel integration with a fixed,
// deterministic refinement and summation order: identical inputs produce
// bit-identical results.  Nodes are interior, so the integrand is never
// evaluated at panel endpoints.
#pragma once

#include <functional>
#include <stdexcept>

namespace branchlaw {

struct QuadratureSpec {
    double rel_tol = 1e-12;
    double abs_tol = 0.0;       // pure relative control by default
    int initial_panels = 16;
    int max_panels = 8192;

    bool operator==(const QuadratureSpec&) const = default;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels = 0;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integrates f over [a, b]; throws QuadratureError if the tolerance is not
// met within the panel budget.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureSpec& spec = {});

// Fixed-shape pairwise tree sum (the deterministic reduction used for panel
// contributions).
double pairwise_sum(const double* data, std::size_t count);

}  // namespace branchlaw
