#include "nonisog/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "nonisog/errors.hpp"

namespace nonisog {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1u) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact below 3.3e24, so in particular for all of u64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (!n.fits_ulong_p()) throw CapabilityError("primality test limited to 64-bit inputs: " + n.get_str());
  return is_prime_u64(n.get_ui());
}

namespace {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Brent's variant; returns a nontrivial factor of composite n (n odd, > 3).
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mulmod_u64(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t m = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  split_u64(d, out);
  split_u64(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor_integer(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw InvalidInput("cannot factor 0");
  Integer m = abs(n);
  std::vector<PrimePower> out;
  auto take = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) out.push_back({Integer(p), e});
  };
  take(2);
  std::uint64_t p = 3;
  for (; p < options.trial_bound; p += 2) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    take(p);
  }
  if (m == 1) return out;
  // Either everything below sqrt(m) has been tried, or m < trial_bound^2.
  if (Integer(p) * p > m || m < Integer(options.trial_bound) * options.trial_bound) {
    out.push_back({m, 1});
    return out;
  }
  if (!m.fits_ulong_p()) {
    throw CapabilityError("unfactored: cofactor " + m.get_str() + " exceeds 64 bits after trial division");
  }
  std::map<std::uint64_t, unsigned> rest;
  split_u64(m.get_ui(), rest);
  for (const auto& [q, e] : rest) out.push_back({Integer(q), e});
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

Integer squarefree_part(const Integer& n, const FactorOptions& options) {
  if (n == 0) throw InvalidInput("squarefree_part of 0");
  Integer d = 1;
  for (const auto& pp : factor_integer(n, options)) {
    if (pp.exponent % 2 == 1) d *= pp.prime;
  }
  return n < 0 ? Integer(-d) : d;
}

bool is_square(const Rational& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

Integer multiplicative_order(const Integer& a, const Integer& n) {
  if (n < 2) throw InvalidInput("multiplicative_order requires n >= 2");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw InvalidInput("multiplicative_order requires gcd(a, n) = 1");
  // Euler phi from the factorization of n, then strip prime factors of phi.
  Integer phi = 1;
  for (const auto& pp : factor_integer(n)) {
    phi *= pow(pp.prime, pp.exponent - 1) * (pp.prime - 1);
  }
  Integer order = phi;
  Integer t;
  for (const auto& pp : factor_integer(phi)) {
    for (unsigned e = 0; e < pp.exponent; ++e) {
      Integer candidate = order / pp.prime;
      mpz_powm(t.get_mpz_t(), a.get_mpz_t(), candidate.get_mpz_t(), n.get_mpz_t());
      if (t != 1) break;
      order = candidate;
    }
  }
  return order;
}

bool is_primitive_root(const Integer& a, const Integer& n) {
  if (n < 3 || n % 2 == 0 || !is_prime(n)) throw InvalidInput("is_primitive_root requires an odd prime modulus");
  return multiplicative_order(a, n) == n - 1;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (std::uint64_t i = 2; i <= hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = i * i; j <= hi; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace nonisog
