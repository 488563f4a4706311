#include "nonisog/detail/modp.hpp"

#include <algorithm>
#include <utility>

#include "nonisog/errors.hpp"
#include "nonisog/number_theory.hpp"

namespace nonisog::detail {

void trim(Fp& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("inverse of 0 mod p");
  return powmod_u64(a, p - 2, p);
}

Fp add(const Fp& a, const Fp& b, std::uint64_t p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Fp sub(const Fp& a, const Fp& b, std::uint64_t p) {
  Fp r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Fp mul(const Fp& a, const Fp& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Fp scale(const Fp& a, std::uint64_t c, std::uint64_t p) {
  Fp r(a);
  for (auto& x : r) x = x * (c % p) % p;
  trim(r);
  return r;
}

Fp monic(const Fp& a, std::uint64_t p) {
  if (a.empty()) return {};
  return scale(a, inv_mod(a.back(), p), p);
}

Fp derivative(const Fp& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Fp r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

FpDivMod divmod(const Fp& a, const Fp& b, std::uint64_t p) {
  if (b.empty()) throw DivisionByZero("F_p polynomial division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  Fp r(a);
  const int db = deg(b);
  Fp q(deg(a) - db + 1, 0);
  const std::uint64_t inv = inv_mod(b.back(), p);
  for (int i = deg(a) - db; i >= 0; --i) {
    const std::uint64_t t = r[i + db] * inv % p;
    q[i] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[i + j] = (r[i + j] + (p - t) * b[j]) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {std::move(q), std::move(r)};
}

Fp rem(const Fp& a, const Fp& b, std::uint64_t p) { return divmod(a, b, p).remainder; }

Fp gcd(Fp a, Fp b, std::uint64_t p) {
  while (!b.empty()) {
    Fp r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

FpExtGcd ext_gcd(const Fp& a, const Fp& b, std::uint64_t p) {
  Fp r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Fp s2 = sub(s0, mul(q, s1, p), p);
    Fp t2 = sub(t0, mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {};
  const std::uint64_t inv = inv_mod(r0.back(), p);
  return {scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)};
}

Fp powmod(const Fp& base, std::uint64_t e, const Fp& m, std::uint64_t p) {
  Fp result{1};
  result = rem(result, m, p);
  Fp b = rem(base, m, p);
  while (e) {
    if (e & 1u) result = rem(mul(result, b, p), m, p);
    e >>= 1;
    if (e) b = rem(mul(b, b, p), m, p);
  }
  return result;
}

}  // namespace nonisog::detail
