#pragma once

#include <gmpxx.h>

#include <string>

namespace traverse {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalized num/den. Throws std::invalid_argument on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational make_rational(long num, long den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

Rational midpoint(const Rational& a, const Rational& b);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// The rational of smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace traverse
