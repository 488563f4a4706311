#include "nonisog/curves.hpp"

#include <algorithm>

#include "nonisog/errors.hpp"
#include "nonisog/factorization.hpp"

namespace nonisog {

ShortWeierstrass short_weierstrass(const Polynomial& f) {
  if (f.degree() != 3) throw InvalidInput("short_weierstrass needs a cubic, got degree " + std::to_string(f.degree()));
  if (discriminant(f) == 0) throw InvalidInput("cubic has a repeated root: " + f.to_string());
  const Rational& c = f[3];
  // c^2 f(X/c) = X^3 + f2 X^2 + c f1 X + c^2 f0
  const Rational p = f[2];
  const Rational q = c * f[1];
  const Rational r = c * c * f[0];
  ShortWeierstrass w;
  w.a = q - p * p / 3;
  w.b = r - p * q / 3 + 2 * p * p * p / 27;
  w.a.canonicalize();
  w.b.canonicalize();
  return w;
}

JInvariant j_invariant(const Polynomial& f) {
  const ShortWeierstrass w = short_weierstrass(f);
  const Rational a3 = w.a * w.a * w.a;
  const Rational denom = 4 * a3 + 27 * w.b * w.b;
  if (denom == 0) throw InternalInconsistency("singular short model from a squarefree cubic");
  Rational j = 6912 * a3 / denom;
  j.canonicalize();
  return {j};
}

bool in_S(const JInvariant& j) {
  const auto& s = cm_sqrt_minus3_j_set();
  return std::find(s.begin(), s.end(), j.value) != s.end();
}

int genus(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidInput("genus needs odd n >= 3, got " + std::to_string(n));
  return (n - 1) / 2;
}

}  // namespace nonisog
