// Exact algebra of even symmetric polynomials in m variables, stored
// orbit-wise: a term (lambda, c) stands for c * sum over distinct
// permutations sigma of lambda of x^{2 sigma}.  An exponent lambda_i
// always means x_i^{2 lambda_i}; everything here is even.
#pragma once

#include "branchlaw/multi_index.hpp"
#include "branchlaw/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace branchlaw {

class EvenSymPoly {
public:
    using TermMap = std::map<Partition, Rational, DescLexLess>;

    explicit EvenSymPoly(int m) : m_(m) {
        if (m < 1) throw std::invalid_argument("EvenSymPoly: m must be positive");
    }
    EvenSymPoly(int m, TermMap terms) : m_(m), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.size() != m_) throw std::invalid_argument("EvenSymPoly: partition length != m");
            if (it->second == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    int var_count() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree in x (twice the largest orbit weight); the zero polynomial
    // reports -1.
    int degree() const {
        int d = -1;
        for (const auto& [lambda, c] : terms_) d = std::max(d, 2 * lambda.weight());
        return d;
    }

    Rational coeff(const Partition& lambda) const {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Partition& lambda, const Rational& c) {
        if (lambda.size() != m_) throw std::invalid_argument("EvenSymPoly: partition length != m");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    EvenSymPoly& operator+=(const EvenSymPoly& other) {
        require_same_m(other);
        for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
        return *this;
    }
    friend EvenSymPoly operator+(EvenSymPoly a, const EvenSymPoly& b) { return a += b; }

    EvenSymPoly& operator-=(const EvenSymPoly& other) {
        require_same_m(other);
        for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
        return *this;
    }
    friend EvenSymPoly operator-(EvenSymPoly a, const EvenSymPoly& b) { return a -= b; }

    EvenSymPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [lambda, c] : terms_) c *= s;
        return *this;
    }
    friend EvenSymPoly operator*(EvenSymPoly p, const Rational& s) { return p *= s; }
    friend EvenSymPoly operator*(const Rational& s, EvenSymPoly p) { return p *= s; }

    bool operator==(const EvenSymPoly&) const = default;

private:
    void require_same_m(const EvenSymPoly& other) const {
        if (m_ != other.m_) throw std::invalid_argument("EvenSymPoly: mixed variable counts");
    }

    int m_;
    TermMap terms_;
};

// Exact product, preserving the orbit representation.
EvenSymPoly multiply(const EvenSymPoly& p, const EvenSymPoly& q);

// psi_k = sum over |beta| = k of multinomial(k,beta)^2 (2beta)! x^{2beta}.
EvenSymPoly build_psi(int m, int k);

// Exact value at a rational point (sum over all distinct permutations per
// orbit).
Rational evaluate(const EvenSymPoly& p, std::span<const Rational> x);
double evaluate(const EvenSymPoly& p, std::span<const double> x);

// ||psi_k||_1^2 = 4^{2k} (k!)^2 (m/2)_k (n/2)_k.
Rational psi_norm_sq(int n, int m, int k);

// Value of the orthonormal basis vector phi_k = psi_k / ||psi_k||_1.
double phi_evaluate(int n, int m, int k, std::span<const double> x);

}  // namespace branchlaw
