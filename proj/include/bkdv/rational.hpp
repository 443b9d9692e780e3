#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "bkdv/errors.hpp"

namespace bkdv {

// Exact arbitrary-precision rational scalar. boost keeps values reduced with
// positive denominator, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// Parses "p", "-p", or "p/q".
inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::exception& e) {
        throw ParseError("bad rational literal '" + s + "': " + e.what());
    }
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// (2n-1)!! with the usual conventions (-1)!! = 1!! = 1.
inline Integer double_factorial(int n) {
    if (n <= 0) return 1;
    Integer f = 1;
    for (int i = n; i >= 2; i -= 2) f *= i;
    return f;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

inline Rational rational_pow(const Rational& q, int e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw DivisionNotExact("0^negative");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(denominator(q), numerator(q)) : q;
    int n = e < 0 ? -e : e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

} // namespace bkdv
