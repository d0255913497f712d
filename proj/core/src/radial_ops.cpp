#include "branchlaw/radial_ops.hpp"

#include <future>
#include <map>

namespace branchlaw {

namespace {

using MonoMap = std::map<std::vector<int>, Rational>;

MonoMap expand(const EvenSymPoly& p) {
    MonoMap out;
    for (const auto& [lambda, c] : p.terms())
        for (const auto& perm : lambda.distinct_permutations()) out[perm] = c;
    return out;
}

void add_mono(MonoMap& map, std::vector<int> e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = map.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) map.erase(it);
    }
}

// Folds a symmetric monomial map back into orbit form, verifying that the
// coefficient is constant along every orbit.  A mismatch can only come from
// a broken cancellation in the operator application.
EvenSymPoly fold(const MonoMap& monos, int m) {
    EvenSymPoly::TermMap terms;
    for (const auto& [e, c] : monos) {
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end(), std::greater<int>());
        if (sorted == e) terms.emplace(Partition(sorted), c);
    }
    EvenSymPoly out(m, std::move(terms));
    for (const auto& [e, c] : monos) {
        if (out.coeff(Partition::orbit_of(MultiIndex(e))) != c)
            throw std::logic_error("radial operator produced a non-symmetric image");
    }
    return out;
}

enum class CrossKind { Lower, Keep, Raise };

// Image of 2 * w(x_i,x_j) * (x_i d_i - x_j d_j)/(x_i^2 - x_j^2) on the
// symmetrised pair x_i^{2c} x_j^{2d} + x_i^{2d} x_j^{2c} (c > d), where w is
// 1, (x_i^2 + x_j^2) or x_i^2 x_j^2 depending on the operator part.  Uses
// the closed form
//   (x_i d_i - x_j d_j)/(x_i^2-x_j^2) (pair)
//     = 2(c-d) (x_i x_j)^{2d} sum_{u=0}^{c-d-1} x_i^{2u} x_j^{2(c-d-1-u)}.
void add_cross_image(MonoMap& out, const std::vector<int>& e, int i, int j, const Rational& coeff,
                     CrossKind kind) {
    const int c = e[static_cast<size_t>(i)], d = e[static_cast<size_t>(j)];
    // prefactor 2 from the operator, 2(c-d) from the closed form; the
    // degree-keeping part enters with a minus sign (its collapse at
    // (x1,0,...) subtracts 4k(m-1)(2k)! x1^{2k})
    Rational factor = coeff * 2 * 2 * (c - d);
    if (kind == CrossKind::Keep) factor = -factor;
    for (int u = 0; u <= c - d - 1; ++u) {
        const int ei = d + u, ej = c - 1 - u;  // exponents replacing (c, d)
        std::vector<int> base = e;
        switch (kind) {
            case CrossKind::Lower:
                base[static_cast<size_t>(i)] = ei;
                base[static_cast<size_t>(j)] = ej;
                add_mono(out, std::move(base), factor);
                break;
            case CrossKind::Keep: {
                std::vector<int> other = base;
                base[static_cast<size_t>(i)] = ei + 1;
                base[static_cast<size_t>(j)] = ej;
                add_mono(out, std::move(base), factor);
                other[static_cast<size_t>(i)] = ei;
                other[static_cast<size_t>(j)] = ej + 1;
                add_mono(out, std::move(other), factor);
                break;
            }
            case CrossKind::Raise:
                base[static_cast<size_t>(i)] = ei + 1;
                base[static_cast<size_t>(j)] = ej + 1;
                add_mono(out, std::move(base), factor);
                break;
        }
    }
}

}  // namespace

EvenSymPoly apply_L_minus(const EvenSymPoly& p, int n) {
    const int m = p.var_count();
    if (n < m) throw std::invalid_argument("apply_L_minus: require n >= m");
    MonoMap out;
    for (const auto& [e, coeff] : expand(p)) {
        for (int i = 0; i < m; ++i) {
            const int b = e[static_cast<size_t>(i)];
            if (b == 0) continue;
            // d^2/dx^2 + (n-m)/x d/dx on x^{2b}
            std::vector<int> img = e;
            img[static_cast<size_t>(i)] = b - 1;
            add_mono(out, std::move(img), coeff * (2 * b * (2 * b - 1) + 2 * b * (n - m)));
        }
        // Each symmetrised pair x_i^{2c} x_j^{2d} + x_i^{2d} x_j^{2c} (c > d)
        // is handled once: the monomial with the larger exponent at index i
        // carries it, the swapped partner (present with equal coefficient by
        // symmetry of p) is skipped.
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (e[static_cast<size_t>(i)] > e[static_cast<size_t>(j)])
                    add_cross_image(out, e, i, j, coeff, CrossKind::Lower);
    }
    return fold(out, m);
}

EvenSymPoly apply_L_zero(const EvenSymPoly& p, int n) {
    const int m = p.var_count();
    if (n < m) throw std::invalid_argument("apply_L_zero: require n >= m");
    MonoMap out;
    for (const auto& [e, coeff] : expand(p)) {
        add_mono(out, e, coeff * (-m * n));
        for (int i = 0; i < m; ++i) {
            const int b = e[static_cast<size_t>(i)];
            if (b == 0) continue;
            // (-4-(n-m)) x d/dx - 2 x^2 d^2/dx^2 on x^{2b}
            std::vector<int> img = e;
            add_mono(out, std::move(img),
                     coeff * ((-4 - (n - m)) * 2 * b - 2 * 2 * b * (2 * b - 1)));
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (e[static_cast<size_t>(i)] > e[static_cast<size_t>(j)])
                    add_cross_image(out, e, i, j, coeff, CrossKind::Keep);
    }
    return fold(out, m);
}

EvenSymPoly apply_L_plus(const EvenSymPoly& p, int n) {
    const int m = p.var_count();
    if (n < m) throw std::invalid_argument("apply_L_plus: require n >= m");
    MonoMap out;
    for (const auto& [e, coeff] : expand(p)) {
        for (int i = 0; i < m; ++i) {
            const int b = e[static_cast<size_t>(i)];
            // 2 x^2 + 4 x^3 d/dx + x^4 d^2/dx^2 on x^{2b}
            std::vector<int> img = e;
            img[static_cast<size_t>(i)] = b + 1;
            add_mono(out, std::move(img), coeff * (2 + 8 * b + 2 * b * (2 * b - 1)));
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < i; ++j)
                if (e[static_cast<size_t>(i)] > e[static_cast<size_t>(j)])
                    add_cross_image(out, e, i, j, coeff, CrossKind::Raise);
    }
    return fold(out, m);
}

EvenSymPoly apply_L1(const EvenSymPoly& p, int n) {
    EvenSymPoly sum = apply_L_minus(p, n);
    sum += apply_L_zero(p, n);
    sum += apply_L_plus(p, n);
    return sum * Rational(1, 4);
}

JacobiCoeffs jacobi_coeffs(int n, int m, int k) {
    if (n < m || m < 1) throw std::invalid_argument("jacobi_coeffs: require n >= m >= 1");
    if (k < 0) throw std::invalid_argument("jacobi_coeffs: k must be nonnegative");
    JacobiCoeffs c;
    const Rational K(k);
    c.A = 4 * pow_int(K, 4) + (4 * (m - 2) + 2 * (n - m)) * pow_int(K, 3) +
          ((m - 2) * (m - 2) + (n - m) * (m - 2)) * pow_int(K, 2);
    c.B = -2 * pow_int(K, 2) - Rational(n + m, 2) * K - Rational(m * n, 4);
    c.C = Rational(1, 4);
    // dual Hahn recursion constants at this parameter slice (b+c = 1):
    // Ap = k(k+b+c-1) = k^2, Cp = (k+a+b)(k+a+c) = (k+n/2)(k+m/2)
    c.Ap = pow_int(K, 2);
    c.Cp = (K + Rational(n, 2)) * (K + Rational(m, 2));
    c.Bp = -(c.Ap + c.Cp);
    return c;
}

Rational jacobi_A_factored(int n, int m, int k) {
    const Rational K(k);
    return 4 * K * K * (K - 1 + Rational(n, 2)) * (K - 1 + Rational(m, 2));
}

RecurrenceReport verify_recurrence(int n, int m, int k_max) {
    if (n < m || m < 1) throw std::invalid_argument("verify_recurrence: require n >= m >= 1");
    RecurrenceReport report;
    report.n = n;
    report.m = m;

    auto check_one = [n, m](int k) {
        RecurrenceReport::Entry entry;
        entry.k = k;
        const EvenSymPoly lhs = apply_L1(build_psi(m, k), n);
        const JacobiCoeffs c = jacobi_coeffs(n, m, k);
        EvenSymPoly rhs = build_psi(m, k) * c.B + build_psi(m, k + 1) * c.C;
        if (k > 0) rhs += build_psi(m, k - 1) * c.A;
        const EvenSymPoly diff = lhs - rhs;
        entry.pass = diff.is_zero();
        if (!entry.pass) {
            const auto& [lambda, coeff] = *diff.terms().begin();
            entry.detail = "first differing orbit " + lambda.str() + ": lhs-rhs = " +
                           to_string(coeff);
        }
        return entry;
    };

    std::vector<std::future<RecurrenceReport::Entry>> futures;
    futures.reserve(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k)
        futures.push_back(std::async(std::launch::async, check_one, k));
    for (auto& f : futures) report.results.push_back(f.get());
    return report;
}

}  // namespace branchlaw
