#pragma once

// Exact arbitrary-precision rationals and integers (GMP-backed).

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace umbral {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

Rational pow(const Rational& base, long exponent);
Integer factorial(unsigned long n);

// Multiplicative formula; exact for any n >= k.
Integer binomial(unsigned long n, unsigned long k);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

double to_double(const Rational& r);

}  // namespace umbral
