#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nonisog/rational.hpp"

namespace nonisog {

/// Dense univariate polynomial over Q. Coefficient i multiplies x^i; the
/// stored leading coefficient is never zero, so the zero polynomial is the
/// empty vector and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  static Polynomial variable();
  /// Convenience for literals in code and tests: {22, -15, 0, 1} is x^3 - 15x + 22.
  static Polynomial from_integers(std::initializer_list<long> coefficients);
  static Polynomial from_integers(const std::vector<Integer>& coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_monic() const;

  /// Coefficient of x^i; zero past the degree.
  const Rational& operator[](std::size_t i) const;
  const Rational& leading_coefficient() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  Polynomial derivative() const;
  Polynomial monic() const;
  Rational evaluate(const Rational& x) const;
  /// f(g(x)).
  Polynomial compose(const Polynomial& g) const;
  /// f(x + c).
  Polynomial shifted(const Rational& c) const;

  /// True iff every coefficient is an integer.
  bool has_integer_coefficients() const;

  /// Parseable rendering, e.g. "x^3 - 15*x + 22" or "3/4*x^2 - 1".
  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division over Q. Throws DivisionByZero for a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial gcd;  // monic
  Polynomial s;
  Polynomial t;    // s*a + t*b = gcd
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& base, unsigned exponent);

/// Positive rational c with f = c * (primitive integer polynomial with positive
/// leading coefficient). Zero for the zero polynomial.
Rational content(const Polynomial& f);
/// Primitive integer coefficients of f / content(f); leading coefficient > 0.
std::vector<Integer> primitive_part(const Polynomial& f);

/// Res(f, g) by the subresultant PRS over Z after clearing denominators.
/// Throws InvalidInput if both f and g are zero.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f). Throws InvalidInput when deg f < 2.
Rational discriminant(const Polynomial& f);

}  // namespace nonisog
