#pragma once

#include <gmpxx.h>

#include <string>

namespace ckdse {

// Exact arithmetic over Q. Fertility factorials overflow fixed-width
// integers already at modest weights, so everything is GMP-backed.
using Integer = mpz_class;
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// Accepts "p", "-p" and "p/q"; rejects everything else (including q = 0).
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

Integer factorial(unsigned long n);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Exact compare of two rationals, <0 / 0 / >0.
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace ckdse
