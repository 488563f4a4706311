#include "nonisog/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "nonisog/detail/zpoly.hpp"
#include "nonisog/errors.hpp"

namespace nonisog {

namespace {
const Rational kZero(0);
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::from_integers(std::initializer_list<long> coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (long c : coefficients) v.emplace_back(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_integers(const std::vector<Integer>& coefficients) {
  std::vector<Rational> v(coefficients.begin(), coefficients.end());
  return Polynomial(std::move(v));
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

const Rational& Polynomial::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& Polynomial::leading_coefficient() const {
  return coeffs_.empty() ? kZero : coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return {};
  Polynomial r(*this);
  const Rational inv = 1 / coeffs_.back();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * g + constant(*it);
  }
  return acc;
}

Polynomial Polynomial::shifted(const Rational& c) const {
  return compose(Polynomial(std::vector<Rational>{c, 1}));
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (k == 0) {
      out << nonisog::to_string(mag);
      continue;
    }
    if (!unit) out << nonisog::to_string(mag) << "*";
    out << "x";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  Polynomial p;
  p.coeffs_ = std::move(r);
  p.normalize();
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<Rational> quo(a.degree() - db + 1);
  const Rational inv = 1 / b.leading_coefficient();
  for (int i = a.degree() - db; i >= 0; --i) {
    const Rational t = rem[i + db] * inv;
    quo[i] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i + j] -= t * b[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    Polynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {{}, {}, {}};
  const Rational inv = 1 / r0.leading_coefficient();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

Rational content(const Polynomial& f) {
  if (f.is_zero()) return 0;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational c = make_rational(num_gcd, den_lcm);
  if (f.leading_coefficient() < 0) c = -c;
  return c;
}

std::vector<Integer> primitive_part(const Polynomial& f) {
  if (f.is_zero()) return {};
  const Rational c = content(f);
  std::vector<Integer> out;
  out.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) {
    Rational q = a / c;
    out.push_back(q.get_num());
  }
  return out;
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw InvalidInput("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return 0;
  // f = cf * F, g = cg * G with F, G primitive integer polynomials;
  // Res(f, g) = cf^deg g * cg^deg f * Res(F, G).
  const Rational cf = content(f);
  const Rational cg = content(g);
  const Integer r = detail::subresultant(primitive_part(f), primitive_part(g));
  return pow(cf, static_cast<unsigned long>(g.degree())) * pow(cg, static_cast<unsigned long>(f.degree())) *
         Rational(r);
}

Rational discriminant(const Polynomial& f) {
  if (f.degree() < 2) throw InvalidInput("discriminant requires degree >= 2");
  const long n = f.degree();
  Rational d = resultant(f, f.derivative()) / f.leading_coefficient();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

}  // namespace nonisog
