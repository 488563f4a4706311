#pragma once

#include <array>

#include "nonisog/polynomial.hpp"

namespace nonisog {

/// y^2 = x^3 + a x + b with 4a^3 + 27b^2 != 0.
struct ShortWeierstrass {
  Rational a;
  Rational b;
  friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
};

struct JInvariant {
  Rational value;
  friend bool operator==(const JInvariant&, const JInvariant&) = default;
};

/// Short model of y^2 = f(x) over Q-bar. A leading coefficient c is absorbed
/// by (x, y) -> (x/c, y/c), then x -> x - p/3 removes the quadratic term.
/// Throws InvalidInput unless f is a squarefree cubic.
ShortWeierstrass short_weierstrass(const Polynomial& f);

/// 6912 a^3 / (4a^3 + 27 b^2) of the short model.
JInvariant j_invariant(const Polynomial& f);

/// The j-invariants of curves over Q whose geometric endomorphism algebra is
/// Q(sqrt(-3)):  0,  2^4 3^3 5^3 = 54000,  -2^15 3 5^3 = -12288000.
inline const std::array<Rational, 3>& cm_sqrt_minus3_j_set() {
  static const std::array<Rational, 3> s{Rational(0), Rational(54000), Rational(-12288000)};
  return s;
}

bool in_S(const JInvariant& j);

/// (n - 1) / 2 for odd n >= 3; InvalidInput otherwise.
int genus(int n);

}  // namespace nonisog
