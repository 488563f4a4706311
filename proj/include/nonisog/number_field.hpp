#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nonisog/polynomial.hpp"

namespace nonisog {

class FieldElement;

/// Stem field Q[x]/(m) for a monic irreducible m, elements in the power basis
/// of the class of x. Copies share the (immutable) minimal polynomial.
class NumberField {
 public:
  /// Verifies that m is monic and irreducible over Q; throws InvalidInput otherwise.
  explicit NumberField(const Polynomial& min_poly);

  const Polynomial& min_poly() const noexcept { return *m_; }
  int degree() const noexcept { return m_->degree(); }

  FieldElement element(const Polynomial& repr) const;
  FieldElement from_rational(const Rational& q) const;
  FieldElement generator() const;
  FieldElement zero() const;
  FieldElement one() const;

  /// Same minimal polynomial, i.e. literally the same presentation.
  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.m_ == b.m_ || *a.m_ == *b.m_;
  }

 private:
  std::shared_ptr<const Polynomial> m_;
};

class FieldElement {
 public:
  FieldElement(NumberField owner, Polynomial repr);

  const NumberField& field() const noexcept { return owner_; }
  const Polynomial& repr() const noexcept { return repr_; }
  bool is_zero() const noexcept { return repr_.is_zero(); }
  bool is_rational() const noexcept { return repr_.degree() <= 0; }

  /// a * inverse() = 1; extended gcd of repr and m over Q. Throws DivisionByZero for 0.
  FieldElement inverse() const;
  /// N_{K/Q}(a) = Res(m, repr).
  Rational norm() const;

  std::string to_string() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  NumberField owner_;
  Polynomial repr_;
};

FieldElement nf_inverse(const FieldElement& a);

/// Polynomial in x with coefficients in a number field K.
class PolyOverK {
 public:
  PolyOverK(NumberField field, std::vector<FieldElement> coefficients);
  /// Embeds a rational polynomial.
  PolyOverK(NumberField field, const Polynomial& f);

  const NumberField& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<FieldElement>& coefficients() const noexcept { return c_; }
  FieldElement coefficient(std::size_t i) const;
  const FieldElement& leading_coefficient() const;

  PolyOverK monic() const;
  PolyOverK derivative() const;
  /// f(x + c).
  PolyOverK shifted(const FieldElement& c) const;
  FieldElement evaluate(const FieldElement& x) const;

  std::string to_string() const;

  friend PolyOverK operator+(const PolyOverK& a, const PolyOverK& b);
  friend PolyOverK operator-(const PolyOverK& a, const PolyOverK& b);
  friend PolyOverK operator*(const PolyOverK& a, const PolyOverK& b);
  friend bool operator==(const PolyOverK& a, const PolyOverK& b);

 private:
  void normalize();
  NumberField field_;
  std::vector<FieldElement> c_;
};

struct PolyOverKDivMod {
  PolyOverK quotient;
  PolyOverK remainder;
};
PolyOverKDivMod divmod(const PolyOverK& a, const PolyOverK& b);
/// Monic gcd over K.
PolyOverK gcd(const PolyOverK& a, const PolyOverK& b);

/// Norm over Q of a polynomial with coefficients in K: the product of its
/// conjugates, computed as Res_y(m(y), f(x, y)) by evaluation at deg+1 integer
/// points and interpolation.
Polynomial norm(const PolyOverK& f);

struct KFactor {
  PolyOverK factor;  // monic, irreducible over K
  unsigned multiplicity = 1;
};

/// Trager's algorithm. Shifts s = 0, 1, -1, 2, -2, ... until the norm of
/// f(x - s*theta) is squarefree, factors that norm over Q, and pulls each
/// rational factor back through a gcd over K. Factors are sorted by degree.
/// Throws CapabilityError when a norm would exceed kMaxFactorDegree.
std::vector<KFactor> trager_factor(const PolyOverK& f);

/// Sorted degrees of the irreducible factors of f over its own stem field.
/// Throws InvalidInput if f is reducible over Q.
std::vector<int> stem_factor_pattern(const Polynomial& f);

/// True iff f has a linear factor over K.
bool has_root_in(const NumberField& field, const Polynomial& f);

/// Equal degree and the minimal polynomial of one has a root in the other.
bool fields_isomorphic(const NumberField& a, const NumberField& b);

}  // namespace nonisog
