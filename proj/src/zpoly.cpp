#include "nonisog/detail/zpoly.hpp"

#include <algorithm>
#include <utility>

#include "nonisog/errors.hpp"

namespace nonisog::detail {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  if (c == 0) return {};
  ZPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

ZPoly divexact(const ZPoly& a, const Integer& c) {
  ZPoly r(a);
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive(const ZPoly& f) {
  if (f.empty()) return {};
  return divexact(f, content(f));
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DivisionByZero("pseudo-division by zero polynomial");
  ZPoly r(a);
  const int db = deg(b);
  int e = deg(a) - db + 1;
  if (e <= 0) return r;
  const Integer& l = lc(b);
  while (!r.empty() && deg(r) >= db) {
    const Integer t = lc(r);
    const int shift = deg(r) - db;
    for (auto& c : r) c *= l;
    for (int j = 0; j <= db; ++j) r[j + shift] -= t * b[j];
    trim(r);
    --e;
  }
  if (e > 0) r = scale(r, pow(l, static_cast<unsigned long>(e)));
  return r;
}

std::optional<ZPoly> exact_quotient(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw DivisionByZero("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (deg(a) < deg(b)) return std::nullopt;
  ZPoly r(a);
  ZPoly q(deg(a) - deg(b) + 1);
  const int db = deg(b);
  const Integer& l = lc(b);
  Integer t;
  for (int i = deg(a) - db; i >= 0; --i) {
    const Integer& top = r[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), l.get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), l.get_mpz_t());
    q[i] = t;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

ZPoly symmetric_mod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] > half) r[i] -= m;
  }
  trim(r);
  return r;
}

ZPoly reduce_mod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  }
  trim(r);
  return r;
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  return reduce_mod(mul(a, b), m);
}

ZDivMod divmod_monic_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (b.empty() || lc(b) != 1) throw InvalidInput("divmod_monic_mod: divisor must be monic");
  ZPoly r = reduce_mod(a, m);
  const int db = deg(b);
  if (deg(r) < db) return {{}, r};
  ZPoly q(deg(r) - db + 1);
  for (int i = deg(r) - db; i >= 0; --i) {
    Integer t = r[i + db];
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    q[i] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  return {reduce_mod(q, m), reduce_mod(r, m)};
}

Integer subresultant(ZPoly a, ZPoly b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  if (deg(a) == 0 && deg(b) == 0) return 1;
  if (deg(a) == 0) return pow(a[0], static_cast<unsigned long>(deg(b)));
  if (deg(b) == 0) return pow(b[0], static_cast<unsigned long>(deg(a)));

  const Integer ca = content(a);
  const Integer cb = content(b);
  a = divexact(a, ca);
  b = divexact(b, cb);
  Integer t = pow(ca, deg(b)) * pow(cb, deg(a));
  int s = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -1;
  }
  Integer g = 1;
  Integer h = 1;
  for (;;) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) s = -s;
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) return 0;
    a = std::move(b);
    b = divexact(r, g * pow(h, static_cast<unsigned long>(delta)));
    g = lc(a);
    // h <- h^(1 - delta) g^delta, exact for delta >= 1
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = pow(g, static_cast<unsigned long>(delta));
      Integer den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) <= 0) break;
  }
  const int da = deg(a);
  Integer num = pow(lc(b), static_cast<unsigned long>(da));
  Integer den = pow(h, static_cast<unsigned long>(da - 1));
  Integer res;
  mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return s * t * res;
}

}  // namespace nonisog::detail
