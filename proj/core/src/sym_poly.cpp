#include "branchlaw/sym_poly.hpp"

#include <cmath>

namespace branchlaw {

namespace {

template <class Scalar>
Scalar evaluate_impl(const EvenSymPoly& p, std::span<const Scalar> x) {
    if (static_cast<int>(x.size()) != p.var_count())
        throw std::invalid_argument("evaluate: point dimension != m");
    Scalar total{0};
    for (const auto& [lambda, c] : p.terms()) {
        Scalar orbit_sum{0};
        for (const auto& perm : lambda.distinct_permutations()) {
            Scalar mono{1};
            for (size_t i = 0; i < perm.size(); ++i) {
                const Scalar sq = x[i] * x[i];
                for (int e = 0; e < perm[i]; ++e) mono *= sq;
            }
            orbit_sum += mono;
        }
        if constexpr (std::is_same_v<Scalar, double>)
            total += to_double(c) * orbit_sum;
        else
            total += c * orbit_sum;
    }
    return total;
}

}  // namespace

EvenSymPoly multiply(const EvenSymPoly& p, const EvenSymPoly& q) {
    if (p.var_count() != q.var_count())
        throw std::invalid_argument("multiply: mixed variable counts");
    const int m = p.var_count();
    // Expand q once into plain monomials, then multiply each monomial of p
    // against them.  The product of symmetric polynomials is symmetric, so
    // collecting only canonical (weakly decreasing) exponent vectors loses
    // nothing.
    std::map<std::vector<int>, Rational> q_monos;
    for (const auto& [mu, d] : q.terms())
        for (const auto& perm : mu.distinct_permutations()) q_monos[perm] = d;

    EvenSymPoly::TermMap out;
    for (const auto& [lambda, c] : p.terms()) {
        for (const auto& perm : lambda.distinct_permutations()) {
            for (const auto& [mono, d] : q_monos) {
                std::vector<int> e(static_cast<size_t>(m));
                bool canonical = true;
                for (int i = 0; i < m; ++i) {
                    e[static_cast<size_t>(i)] = perm[static_cast<size_t>(i)] + mono[static_cast<size_t>(i)];
                    if (i > 0 && e[static_cast<size_t>(i)] > e[static_cast<size_t>(i - 1)]) {
                        canonical = false;
                        break;
                    }
                }
                if (!canonical) continue;
                out[Partition(std::move(e))] += c * d;
            }
        }
    }
    return EvenSymPoly(m, std::move(out));
}

EvenSymPoly build_psi(int m, int k) {
    if (k < 0) throw std::invalid_argument("build_psi: k must be nonnegative");
    EvenSymPoly::TermMap terms;
    for (const auto& lambda : partitions_of(k, m)) {
        const BigInt mult = multinomial(k, lambda);
        terms.emplace(lambda, Rational(mult * mult * even_factorial(lambda)));
    }
    return EvenSymPoly(m, std::move(terms));
}

Rational evaluate(const EvenSymPoly& p, std::span<const Rational> x) {
    return evaluate_impl<Rational>(p, x);
}

double evaluate(const EvenSymPoly& p, std::span<const double> x) {
    return evaluate_impl<double>(p, x);
}

Rational psi_norm_sq(int n, int m, int k) {
    if (n < m || m < 1) throw std::invalid_argument("psi_norm_sq: require n >= m >= 1");
    const Rational fk(factorial(k));
    return pow_int(Rational(4), 2 * k) * fk * fk * pochhammer(Rational(m, 2), k) *
           pochhammer(Rational(n, 2), k);
}

double phi_evaluate(int n, int m, int k, std::span<const double> x) {
    return evaluate(build_psi(m, k), x) / std::sqrt(to_double(psi_norm_sq(n, m, k)));
}

}  // namespace branchlaw
