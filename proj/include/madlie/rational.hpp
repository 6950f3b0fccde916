#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <vector>

#include "madlie/errors.hpp"

namespace madlie {

// Arbitrary-precision rational.  mpq_class keeps gcd(num, den) = 1 and
// den > 0 as long as values are produced through arithmetic operators or
// canonicalize() is called after raw construction.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "3", "-3", "3/2", "-3/2".
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw InputError("bad rational literal: '" + s + "'");
    }
    try {
        Rational r(s);
        if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw InputError("bad rational literal: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// All positive divisors of |n|, by trial division.  n != 0.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    Integer a = abs(n);
    if (a == 0) throw InternalError("positive_divisors(0)");
    std::vector<Integer> small, large;
    Integer d = 1;
    while (d * d <= a) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
        ++d;
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

}  // namespace madlie
