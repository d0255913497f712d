// Exact integer and rational arithmetic used throughout the library.
// Every exact quantity is carried as a Rational; floating point enters
// only at explicitly marked conversion boundaries.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace branchlaw {

using BigInt = boost::multiprecision::cpp_int;

// Stored in lowest terms with positive denominator (canonicalised by the
// backend after every operation).
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Serialises as "p/q", or just "p" when q == 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q <= 0) throw std::invalid_argument("rational denominator must be positive: " + s);
    return Rational(p, q);
}

inline BigInt factorial(int k) {
    if (k < 0) throw std::invalid_argument("factorial of negative integer");
    BigInt r = 1;
    for (int j = 2; j <= k; ++j) r *= j;
    return r;
}

// Rising factorial (t)_k = t(t+1)...(t+k-1), with (t)_0 = 1.
inline Rational pochhammer(const Rational& t, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer order must be nonnegative");
    Rational r = 1;
    for (int j = 0; j < k; ++j) r *= t + j;
    return r;
}

inline Rational pow_int(const Rational& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to negative power");
        return 1 / pow_int(base, -e);
    }
    Rational r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace branchlaw
