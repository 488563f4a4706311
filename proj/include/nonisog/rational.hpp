#pragma once

#include <gmpxx.h>

#include <string>

namespace nonisog {

// Arbitrary-precision scalars. GMP keeps mpz values canonical (no leading
// zero limbs, single zero) and mpq values reduced with positive denominator
// as long as every construction goes through make_rational / canonicalize.
using Integer = mpz_class;
using Rational = mpq_class;

// Throws DivisionByZero when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

// Parses "n" or "n/d" (optional leading sign). Throws InvalidInput.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace nonisog
