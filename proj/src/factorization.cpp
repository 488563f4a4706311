#include "nonisog/factorization.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "nonisog/detail/modp.hpp"
#include "nonisog/detail/zpoly.hpp"
#include "nonisog/errors.hpp"
#include "nonisog/number_theory.hpp"

namespace nonisog {

using detail::Fp;
using detail::ZPoly;

// ---------------------------------------------------------------------------
// ModPPolynomial

namespace {

void check_modulus(std::uint64_t p) {
  if (p < 3 || p >= (std::uint64_t{1} << 31) || !is_prime_u64(p)) {
    throw InvalidInput("modulus must be an odd prime below 2^31, got " + std::to_string(p));
  }
}

}  // namespace

ModPPolynomial::ModPPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coefficients)
    : p_(modulus), c_(std::move(coefficients)) {
  check_modulus(p_);
  for (auto& x : c_) x %= p_;
  detail::trim(c_);
}

ModPPolynomial ModPPolynomial::reduce(const Polynomial& f, std::uint64_t modulus) {
  check_modulus(modulus);
  std::vector<std::uint64_t> c;
  c.reserve(f.coefficients().size());
  Integer r;
  for (const auto& q : f.coefficients()) {
    if (q.get_den() != 1) throw InvalidInput("mod-p reduction needs integer coefficients");
    mpz_fdiv_r_ui(r.get_mpz_t(), q.get_num_mpz_t(), modulus);
    c.push_back(r.get_ui());
  }
  return ModPPolynomial(modulus, std::move(c));
}

ModPPolynomial operator*(const ModPPolynomial& a, const ModPPolynomial& b) {
  if (a.p_ != b.p_) throw InvalidInput("mixed moduli");
  return ModPPolynomial(a.p_, detail::mul(a.c_, b.c_, a.p_));
}

// ---------------------------------------------------------------------------
// Berlekamp

namespace {

// Basis of {v : v^T A = 0}, i.e. the left nullspace, for a square matrix A.
std::vector<Fp> left_nullspace(const std::vector<std::vector<std::uint64_t>>& a, std::uint64_t p) {
  const std::size_t n = a.size();
  // Work on the transpose so the usual column-pivot elimination gives A^T v = 0.
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[j][i] = a[i][j];

  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(m[sel], m[row]);
    const std::uint64_t inv = detail::inv_mod(m[row][col], p);
    for (auto& x : m[row]) x = x * inv % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const std::uint64_t f = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] = (m[r][c] + (p - f) * m[row][c]) % p;
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<Fp> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Fp v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[pivot_col_of_row[r]] = (p - m[r][free]) % p;
    }
    detail::trim(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Rows x^{ip} mod f minus the identity.
std::vector<std::vector<std::uint64_t>> berlekamp_matrix(const Fp& f, std::uint64_t p) {
  const int n = detail::deg(f);
  std::vector<std::vector<std::uint64_t>> q(n, std::vector<std::uint64_t>(n, 0));
  const Fp xp = detail::powmod(Fp{0, 1}, p, f, p);
  Fp cur{1};
  for (int i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.size(); ++j) q[i][j] = cur[j];
    q[i][i] = (q[i][i] + p - 1) % p;
    cur = detail::rem(detail::mul(cur, xp, p), f, p);
  }
  return q;
}

bool fp_less(const Fp& a, const Fp& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

constexpr std::uint64_t kEnumerationPrimeLimit = 4096;

// f monic squarefree; returns its monic irreducible factors.
std::vector<Fp> berlekamp_split(const Fp& f, std::uint64_t p) {
  if (detail::deg(f) <= 1) return {f};
  const auto basis = left_nullspace(berlekamp_matrix(f, p), p);
  const std::size_t r = basis.size();
  std::vector<Fp> factors{f};
  if (r == 1) return factors;

  if (p <= kEnumerationPrimeLimit) {
    for (const Fp& v : basis) {
      if (detail::deg(v) <= 0) continue;
      std::vector<Fp> next;
      for (const Fp& u : factors) {
        if (detail::deg(u) == 1) {
          next.push_back(u);
          continue;
        }
        Fp rest = u;
        for (std::uint64_t s = 0; s < p && detail::deg(rest) > 0; ++s) {
          Fp g = detail::gcd(rest, detail::sub(v, Fp{s}, p), p);
          if (detail::deg(g) > 0) {
            rest = detail::divmod(rest, g, p).quotient;
            next.push_back(std::move(g));
          }
        }
      }
      factors = std::move(next);
      if (factors.size() == r) break;
    }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
    while (factors.size() < r) {
      Fp v;
      for (const Fp& b : basis) v = detail::add(v, detail::scale(b, coef(rng), p), p);
      std::vector<Fp> next;
      for (const Fp& u : factors) {
        if (detail::deg(u) == 1) {
          next.push_back(u);
          continue;
        }
        Fp w = detail::sub(detail::powmod(v, (p - 1) / 2, u, p), Fp{1}, p);
        Fp g = detail::gcd(u, w, p);
        if (detail::deg(g) > 0 && detail::deg(g) < detail::deg(u)) {
          next.push_back(detail::divmod(u, g, p).quotient);
          next.push_back(std::move(g));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  for (auto& g : factors) g = detail::monic(g, p);
  std::sort(factors.begin(), factors.end(), fp_less);
  if (factors.size() != r) throw InternalInconsistency("Berlekamp split count mismatch");
  return factors;
}

// Squarefree factorization over F_p of a monic polynomial.
std::vector<std::pair<Fp, unsigned>> squarefree_mod_p(const Fp& f, std::uint64_t p) {
  std::vector<std::pair<Fp, unsigned>> out;
  if (detail::deg(f) <= 0) return out;
  Fp c = detail::gcd(f, detail::derivative(f, p), p);
  Fp w = detail::divmod(f, c, p).quotient;
  unsigned i = 1;
  while (detail::deg(w) > 0) {
    Fp y = detail::gcd(w, c, p);
    Fp z = detail::divmod(w, y, p).quotient;
    if (detail::deg(z) > 0) out.emplace_back(detail::monic(z, p), i);
    ++i;
    w = std::move(y);
    c = detail::divmod(c, w, p).quotient;
  }
  if (detail::deg(c) > 0) {
    // c' = 0, so c(x) = g(x^p) = g(x)^p over F_p.
    Fp root;
    for (std::size_t k = 0; k * p < c.size(); ++k) root.push_back(c[k * p]);
    detail::trim(root);
    for (auto& [g, e] : squarefree_mod_p(detail::monic(root, p), p)) out.emplace_back(std::move(g), e * static_cast<unsigned>(p));
  }
  return out;
}

}  // namespace

std::vector<ModPFactor> factor_mod_p(const ModPPolynomial& f) {
  if (f.is_zero()) throw InvalidInput("factor_mod_p of the zero polynomial");
  const std::uint64_t p = f.modulus();
  const Fp g = detail::monic(Fp(f.coefficients().begin(), f.coefficients().end()), p);
  std::vector<ModPFactor> out;
  for (const auto& [part, mult] : squarefree_mod_p(g, p)) {
    for (auto& irr : berlekamp_split(part, p)) out.push_back({ModPPolynomial(p, std::move(irr)), mult});
  }
  std::sort(out.begin(), out.end(), [](const ModPFactor& a, const ModPFactor& b) {
    const auto ac = a.factor.coefficients();
    const auto bc = b.factor.coefficients();
    if (ac.size() != bc.size()) return ac.size() < bc.size();
    if (!std::equal(ac.begin(), ac.end(), bc.begin())) {
      return std::lexicographical_compare(ac.begin(), ac.end(), bc.begin(), bc.end());
    }
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

int berlekamp_factor_count(const ModPPolynomial& f) {
  if (f.degree() < 1) throw InvalidInput("berlekamp_factor_count needs degree >= 1");
  const std::uint64_t p = f.modulus();
  const Fp g = detail::monic(Fp(f.coefficients().begin(), f.coefficients().end()), p);
  if (detail::deg(detail::gcd(g, detail::derivative(g, p), p)) > 0) {
    throw InvalidInput("berlekamp_factor_count needs a squarefree polynomial");
  }
  return static_cast<int>(left_nullspace(berlekamp_matrix(g, p), p).size());
}

// ---------------------------------------------------------------------------
// Hensel lifting

namespace {

ZPoly to_z(const Fp& f) { return ZPoly(f.begin(), f.end()); }

Fp to_fp(const ZPoly& f, std::uint64_t p) {
  Fp out(f.size());
  Integer r;
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f[i].get_mpz_t(), p);
    out[i] = r.get_ui();
  }
  detail::trim(out);
  return out;
}

// One factor pair f = g*h (mod p) lifted to modulus `target` (a power of p).
// h stays monic; g carries the leading coefficient.
std::pair<ZPoly, ZPoly> lift_pair(const ZPoly& f, ZPoly g, ZPoly h, ZPoly s, ZPoly t, const Integer& p,
                                  const Integer& target) {
  using namespace detail;
  Integer m = p;
  while (m < target) {
    Integer m2 = m * m;
    if (m2 > target) m2 = target;  // target | m^2, both powers of p
    const ZPoly e = reduce_mod(sub(f, mul(g, h)), m2);
    auto [q, r] = divmod_monic_mod(mul(s, e), h, m2);
    ZPoly g2 = reduce_mod(add(add(g, mul(t, e)), mul(q, g)), m2);
    ZPoly h2 = reduce_mod(add(h, r), m2);
    const ZPoly b = reduce_mod(sub(add(mul(s, g2), mul(t, h2)), ZPoly{1}), m2);
    auto [c, d] = divmod_monic_mod(mul(s, b), h2, m2);
    s = reduce_mod(sub(s, d), m2);
    t = reduce_mod(sub(sub(t, mul(t, b)), mul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
    m = m2;
  }
  return {std::move(g), std::move(h)};
}

std::vector<ZPoly> lift_tree(const ZPoly& f, std::span<const Fp> factors, std::uint64_t p, const Integer& target) {
  using namespace detail;
  if (factors.size() == 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), lc(f).get_mpz_t(), target.get_mpz_t()) == 0) {
      throw InvalidInput("leading coefficient not invertible modulo p");
    }
    return {reduce_mod(scale(f, inv), target)};
  }
  const std::size_t half = factors.size() / 2;
  Fp left{1}, right{1};
  for (std::size_t i = 0; i < half; ++i) left = mul(left, factors[i], p);
  for (std::size_t i = half; i < factors.size(); ++i) right = mul(right, factors[i], p);
  const Fp lcf = to_fp(ZPoly{lc(f)}, p);
  left = scale(left, lcf.empty() ? 0 : lcf[0], p);
  const FpExtGcd eg = ext_gcd(left, right, p);
  if (!is_one(eg.gcd)) throw InvalidInput("hensel_lift: modular factors are not pairwise coprime");
  auto [g, h] = lift_pair(f, to_z(left), to_z(right), to_z(eg.s), to_z(eg.t), Integer(p), target);
  std::vector<ZPoly> out = lift_tree(g, factors.subspan(0, half), p, target);
  std::vector<ZPoly> rest = lift_tree(h, factors.subspan(half), p, target);
  out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
  return out;
}

ZPoly integer_coefficients(const Polynomial& f) {
  ZPoly out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) {
    if (c.get_den() != 1) throw InvalidInput("expected integer coefficients");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

LiftedFactors hensel_lift(const Polynomial& f, std::span<const ModPPolynomial> factors, unsigned k) {
  if (factors.empty()) throw InvalidInput("hensel_lift needs at least one factor");
  if (k == 0) throw InvalidInput("hensel_lift needs k >= 1");
  const std::uint64_t p = factors.front().modulus();
  std::vector<Fp> fs;
  for (const auto& g : factors) {
    if (g.modulus() != p) throw InvalidInput("hensel_lift: mixed moduli");
    if (g.degree() < 1 || g[g.degree()] != 1) throw InvalidInput("hensel_lift: factors must be monic and nonconstant");
    fs.emplace_back(g.coefficients().begin(), g.coefficients().end());
  }
  const ZPoly fz = integer_coefficients(f);
  if (fz.empty() || mpz_divisible_ui_p(fz.back().get_mpz_t(), p)) {
    throw InvalidInput("hensel_lift: p divides the leading coefficient");
  }
  // The mod-p factorization has to be exact before lifting.
  Fp prod = to_fp(ZPoly{fz.back()}, p);
  for (const auto& g : fs) prod = detail::mul(prod, g, p);
  if (prod != to_fp(fz, p)) throw InvalidInput("hensel_lift: factors do not multiply to f mod p");

  const Integer modulus = pow(Integer(p), k);
  LiftedFactors out{modulus, {}};
  for (const auto& z : lift_tree(fz, fs, p, modulus)) {
    out.factors.push_back(Polynomial::from_integers(detail::symmetric_mod(z, modulus)));
  }
  return out;
}

Integer mignotte_bound(const Polynomial& f) {
  const ZPoly fz = integer_coefficients(f);
  if (fz.empty()) return 0;
  Integer norm2 = 0;
  for (const auto& c : fz) norm2 += c * c;
  // ceil(sqrt(4^n * lc^2 * ||f||^2))
  const Integer radicand = pow(Integer(4), detail::deg(fz)) * detail::lc(fz) * detail::lc(fz) * norm2;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  if (root * root != radicand) root += 1;
  return root;
}

// ---------------------------------------------------------------------------
// Zassenhaus

namespace {

// Squarefree primitive integer polynomial with positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  using namespace detail;
  if (deg(f) <= 1) return {f};

  std::uint64_t p = 3;
  Fp fp;
  for (;; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(lc(f).get_mpz_t(), p)) continue;
    fp = monic(to_fp(f, p), p);
    if (deg(gcd(fp, derivative(fp, p), p)) == 0) break;
  }
  const std::vector<Fp> modular = berlekamp_split(fp, p);
  if (modular.size() == 1) return {f};

  const Integer bound = mignotte_bound(Polynomial::from_integers(f));
  Integer modulus = p;
  while (modulus <= 2 * bound) modulus *= p;
  std::vector<ZPoly> lifted = lift_tree(f, modular, p, modulus);
  for (auto& g : lifted) g = symmetric_mod(g, modulus);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    const Integer rest_lc = lc(rest);
    const Integer trailing_target = rest_lc * rest[0];
    for (;;) {
      // Cheap trailing-coefficient test before forming the full product.
      Integer c0 = rest_lc;
      for (std::size_t i : pick) {
        const ZPoly& g = lifted[remaining[i]];
        c0 = c0 * (g.empty() ? Integer(0) : g[0]);
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
      }
      if (c0 > modulus / 2) c0 -= modulus;
      const bool plausible = (c0 == 0) ? (rest[0] == 0) : mpz_divisible_p(trailing_target.get_mpz_t(), c0.get_mpz_t()) != 0;
      if (plausible) {
        ZPoly cand{rest_lc};
        for (std::size_t i : pick) cand = mul_mod(cand, lifted[remaining[i]], modulus);
        cand = primitive(symmetric_mod(cand, modulus));
        if (auto q = exact_quotient(rest, cand)) {
          found.push_back(cand);
          rest = std::move(*q);
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < remaining.size(); ++i) {
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          hit = true;
          break;
        }
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == remaining.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!hit) ++size;
  }
  if (deg(rest) > 0) found.push_back(primitive(rest));
  return found;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto ac = a.factor.coefficients();
  const auto bc = b.factor.coefficients();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] != bc[i]) return ac[i] < bc[i];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("squarefree decomposition of zero");
  std::vector<Factor> out;
  if (f.degree() < 1) return out;
  const Polynomial g = f.monic();
  const Polynomial dg = g.derivative();
  const Polynomial b = gcd(g, dg);
  Polynomial c = g / b;
  Polynomial d = dg / b - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    Polynomial a = gcd(c, d);
    c = c / a;
    d = d / a - c.derivative();
    if (a.degree() > 0) out.push_back({a, i});
    ++i;
  }
  return out;
}

FactorList factor_over_Q(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("factor_over_Q of the zero polynomial");
  if (f.degree() > kMaxFactorDegree) {
    throw CapabilityError("factor_over_Q: degree " + std::to_string(f.degree()) + " exceeds cap " +
                          std::to_string(kMaxFactorDegree));
  }
  FactorList out{f.leading_coefficient(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const ZPoly& z : zassenhaus(primitive_part(part))) {
      out.factors.push_back({Polynomial::from_integers(z).monic(), mult});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

Polynomial FactorList::expand() const {
  Polynomial r = Polynomial::constant(unit);
  for (const auto& [g, m] : factors) r *= pow(g, m);
  return r;
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw InvalidInput("is_squarefree of the zero polynomial");
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) return false;
  return factor_over_Q(f).irreducible();
}

}  // namespace nonisog
