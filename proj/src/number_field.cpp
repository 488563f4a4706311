#include "nonisog/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "nonisog/errors.hpp"
#include "nonisog/factorization.hpp"

namespace nonisog {

// ---------------------------------------------------------------------------
// NumberField / FieldElement

NumberField::NumberField(const Polynomial& min_poly) {
  if (min_poly.degree() < 1) throw InvalidInput("number field needs a nonconstant minimal polynomial");
  if (!min_poly.is_monic()) throw InvalidInput("minimal polynomial must be monic: " + min_poly.to_string());
  if (!is_irreducible(min_poly)) throw InvalidInput("minimal polynomial must be irreducible: " + min_poly.to_string());
  m_ = std::make_shared<const Polynomial>(min_poly);
}

FieldElement NumberField::element(const Polynomial& repr) const { return FieldElement(*this, repr); }
FieldElement NumberField::from_rational(const Rational& q) const { return FieldElement(*this, Polynomial::constant(q)); }
FieldElement NumberField::generator() const { return FieldElement(*this, Polynomial::variable()); }
FieldElement NumberField::zero() const { return FieldElement(*this, Polynomial()); }
FieldElement NumberField::one() const { return from_rational(1); }

FieldElement::FieldElement(NumberField owner, Polynomial repr) : owner_(std::move(owner)), repr_(std::move(repr)) {
  if (repr_.degree() >= owner_.degree()) repr_ = repr_ % owner_.min_poly();
}

namespace {

void same_field(const NumberField& a, const NumberField& b) {
  if (!(a == b)) throw InvalidInput("arithmetic across different number fields");
}

}  // namespace

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in a number field");
  const ExtendedGcd eg = extended_gcd(repr_, owner_.min_poly());
  if (eg.gcd.degree() != 0) throw InternalInconsistency("element shares a factor with an irreducible modulus");
  return FieldElement(owner_, eg.s);
}

Rational FieldElement::norm() const { return resultant(owner_.min_poly(), repr_); }

std::string FieldElement::to_string() const {
  std::string s = repr_.to_string();
  std::replace(s.begin(), s.end(), 'x', 't');
  return s;
}

FieldElement FieldElement::operator-() const { return FieldElement(owner_, -repr_); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  same_field(a.owner_, b.owner_);
  return FieldElement(a.owner_, a.repr_ + b.repr_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  same_field(a.owner_, b.owner_);
  return FieldElement(a.owner_, a.repr_ - b.repr_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  same_field(a.owner_, b.owner_);
  return FieldElement(a.owner_, a.repr_ * b.repr_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) { return a.owner_ == b.owner_ && a.repr_ == b.repr_; }

FieldElement nf_inverse(const FieldElement& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// PolyOverK

PolyOverK::PolyOverK(NumberField field, std::vector<FieldElement> coefficients)
    : field_(std::move(field)), c_(std::move(coefficients)) {
  for (const auto& c : c_) same_field(field_, c.field());
  normalize();
}

PolyOverK::PolyOverK(NumberField field, const Polynomial& f) : field_(std::move(field)) {
  for (const auto& c : f.coefficients()) c_.push_back(field_.from_rational(c));
  normalize();
}

void PolyOverK::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElement PolyOverK::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

const FieldElement& PolyOverK::leading_coefficient() const {
  if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
  return c_.back();
}

PolyOverK PolyOverK::monic() const {
  if (c_.empty()) return *this;
  const FieldElement inv = c_.back().inverse();
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * inv);
  return PolyOverK(field_, std::move(out));
}

PolyOverK PolyOverK::derivative() const {
  std::vector<FieldElement> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * field_.from_rational(static_cast<long>(i)));
  return PolyOverK(field_, std::move(out));
}

PolyOverK PolyOverK::shifted(const FieldElement& c) const {
  // Horner in x + c.
  const PolyOverK lin(field_, std::vector<FieldElement>{c, field_.one()});
  PolyOverK acc(field_, std::vector<FieldElement>{});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin + PolyOverK(field_, std::vector<FieldElement>{*it});
  }
  return acc;
}

FieldElement PolyOverK::evaluate(const FieldElement& x) const {
  FieldElement acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolyOverK::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[k].to_string() << ")";
    if (k >= 1) out << "*x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

PolyOverK operator+(const PolyOverK& a, const PolyOverK& b) {
  same_field(a.field_, b.field_);
  std::vector<FieldElement> out;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coefficient(i) + b.coefficient(i));
  return PolyOverK(a.field_, std::move(out));
}

PolyOverK operator-(const PolyOverK& a, const PolyOverK& b) {
  same_field(a.field_, b.field_);
  std::vector<FieldElement> out;
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coefficient(i) - b.coefficient(i));
  return PolyOverK(a.field_, std::move(out));
}

PolyOverK operator*(const PolyOverK& a, const PolyOverK& b) {
  same_field(a.field_, b.field_);
  if (a.c_.empty() || b.c_.empty()) return PolyOverK(a.field_, std::vector<FieldElement>{});
  // Accumulate unreduced products in Q[y] and reduce once per coefficient.
  std::vector<Polynomial> acc(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].repr() * b.c_[j].repr();
  std::vector<FieldElement> out;
  out.reserve(acc.size());
  for (auto& p : acc) out.emplace_back(a.field_, std::move(p));
  return PolyOverK(a.field_, std::move(out));
}

bool operator==(const PolyOverK& a, const PolyOverK& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

PolyOverKDivMod divmod(const PolyOverK& a, const PolyOverK& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial over K");
  const NumberField& k = a.field();
  if (a.degree() < b.degree()) return {PolyOverK(k, std::vector<FieldElement>{}), a};
  std::vector<FieldElement> rem = a.coefficients();
  const int db = b.degree();
  std::vector<FieldElement> quo(a.degree() - db + 1, k.zero());
  const FieldElement inv = b.leading_coefficient().inverse();
  for (int i = a.degree() - db; i >= 0; --i) {
    const FieldElement t = rem[i + db] * inv;
    quo[i] = t;
    if (t.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] = rem[i + j] - t * b.coefficients()[j];
  }
  rem.resize(db, k.zero());
  return {PolyOverK(k, std::move(quo)), PolyOverK(k, std::move(rem))};
}

PolyOverK gcd(const PolyOverK& a, const PolyOverK& b) {
  PolyOverK x = a, y = b;
  while (!y.is_zero()) {
    PolyOverK r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// Norms and Trager factorization

namespace {

// Newton interpolation through (i, values[i]), i = 0..n-1.
Polynomial interpolate_at_naturals(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  std::vector<Rational> dd(values);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / static_cast<long>(level);
    }
  }
  Polynomial result;
  for (std::size_t i = n; i-- > 0;) {
    // result = result * (x - i) + dd[i]
    result = result * Polynomial(std::vector<Rational>{Rational(-static_cast<long>(i)), 1}) + Polynomial::constant(dd[i]);
  }
  return result;
}

std::vector<KFactor> trager_squarefree(const PolyOverK& g) {
  const NumberField& k = g.field();
  if (g.degree() <= 1) return {{g.monic(), 1}};
  const int norm_degree = g.degree() * k.degree();
  if (norm_degree > kMaxFactorDegree) {
    throw CapabilityError("Trager norm of degree " + std::to_string(norm_degree) + " exceeds cap " +
                          std::to_string(kMaxFactorDegree));
  }
  const FieldElement theta = k.generator();
  for (int attempt = 0; attempt < 64; ++attempt) {
    // 0, 1, -1, 2, -2, ...
    const long s = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    const PolyOverK shifted = g.shifted(k.from_rational(-s) * theta);
    const Polynomial n = norm(shifted);
    if (gcd(n, n.derivative()).degree() != 0) continue;
    const FactorList rational = factor_over_Q(n);
    if (rational.factors.size() == 1) return {{g.monic(), 1}};
    std::vector<KFactor> out;
    for (const auto& [piece, mult] : rational.factors) {
      const PolyOverK h = gcd(shifted, PolyOverK(k, piece));
      out.push_back({h.shifted(k.from_rational(s) * theta).monic(), 1});
    }
    return out;
  }
  throw InternalInconsistency("no squarefree Trager norm within 64 shifts");
}

}  // namespace

Polynomial norm(const PolyOverK& f) {
  const NumberField& k = f.field();
  if (f.is_zero()) return {};
  const int n = f.degree() * k.degree();
  std::vector<Rational> values;
  values.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    const Rational xi(i);
    Polynomial at;  // f(xi, y) in Q[y]
    Rational power(1);
    for (const auto& c : f.coefficients()) {
      at += c.repr() * power;
      power *= xi;
    }
    values.push_back(resultant(k.min_poly(), at));
  }
  return interpolate_at_naturals(values);
}

std::vector<KFactor> trager_factor(const PolyOverK& f) {
  if (f.is_zero()) throw InvalidInput("trager_factor of the zero polynomial");
  const NumberField& k = f.field();
  std::vector<KFactor> out;
  if (f.degree() < 1) return out;

  // Yun over K.
  const PolyOverK g = f.monic();
  const PolyOverK dg = g.derivative();
  const PolyOverK b = gcd(g, dg);
  PolyOverK c = divmod(g, b).quotient;
  PolyOverK d = divmod(dg, b).quotient - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    PolyOverK a = gcd(c, d);
    c = divmod(c, a).quotient;
    d = divmod(d, a).quotient - c.derivative();
    if (a.degree() > 0) {
      for (auto& piece : trager_squarefree(a)) out.push_back({std::move(piece.factor), i});
    }
    ++i;
  }
  (void)k;
  std::stable_sort(out.begin(), out.end(), [](const KFactor& x, const KFactor& y) {
    return x.factor.degree() < y.factor.degree();
  });
  return out;
}

std::vector<int> stem_factor_pattern(const Polynomial& f) {
  if (f.degree() < 1 || !is_irreducible(f)) throw InvalidInput("stem_factor_pattern needs an irreducible polynomial");
  const Polynomial m = f.monic();
  const NumberField k(m);
  std::vector<int> degrees;
  for (const auto& piece : trager_factor(PolyOverK(k, m))) {
    for (unsigned e = 0; e < piece.multiplicity; ++e) degrees.push_back(piece.factor.degree());
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool has_root_in(const NumberField& field, const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("has_root_in of the zero polynomial");
  if (f.degree() < 1) return false;
  for (const auto& piece : trager_factor(PolyOverK(field, f))) {
    if (piece.factor.degree() == 1) return true;
  }
  return false;
}

bool fields_isomorphic(const NumberField& a, const NumberField& b) {
  if (a.degree() != b.degree()) return false;
  if (a == b) return true;
  return has_root_in(b, a.min_poly());
}

}  // namespace nonisog
