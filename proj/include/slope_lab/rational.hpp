#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace slope_lab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms rendering: "p/q" with q > 0, or "p" when q == 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Parses "p", "-p" or "p/q". Throws Error(ParseError) on malformed input or q == 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// num/den in canonical form; throws Error(ParseError) when den == 0.
Rational frac(const Integer& num, const Integer& den);

Rational pow(const Rational& base, unsigned long exponent);
Integer pow(const Integer& base, unsigned long exponent);

Integer factorial(unsigned long n);
Integer binomial(const Integer& n, unsigned long k);

/// Exact conversion to a machine integer; throws Error(Overflow) when out of range.
long to_long(const Integer& value);

}  // namespace slope_lab
