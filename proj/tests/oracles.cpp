#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "nonisog/certifier.hpp"
#include "nonisog/corpus.hpp"
#include "nonisog/curves.hpp"
#include "nonisog/factorization.hpp"
#include "nonisog/parser.hpp"

namespace oracle {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Polynomial random_int_poly(Rng& rng, int deg, long lo, long hi) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = uniform(rng, lo, hi);
  while (c.back() == 0) c.back() = uniform(rng, lo, hi);
  return Polynomial(std::move(c));
}

Polynomial random_rational_poly(Rng& rng, int deg, long bound) {
  std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) {
    x = Rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
    x.canonicalize();
  }
  while (c.back() == 0) {
    c.back() = Rational(uniform(rng, 1, bound), uniform(rng, 1, bound));
    c.back().canonicalize();
  }
  return Polynomial(std::move(c));
}

Polynomial shanks(long a) { return Polynomial::from_integers({-1, -(a + 3), -a, 1}); }

Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) a[r][r + k] = f[static_cast<std::size_t>(m - k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) a[n + r][r + k] = g[static_cast<std::size_t>(n - k)];
  }
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (int c = col; c < size; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  det.canonicalize();
  return det;
}

namespace {

std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// Integer primitive representative with positive leading coefficient.
Polynomial integral_primitive(const Polynomial& f) {
  Integer den = 1;
  for (const Rational& c : f.coefficients()) den = lcm(den, Integer(c.get_den()));
  Integer g = 0;
  for (const Rational& c : f.coefficients()) g = gcd(g, Integer(c * den));
  Rational scale(den, g);
  if (f.leading_coefficient() < 0) scale = -scale;
  scale.canonicalize();
  Polynomial out = f;
  out *= scale;
  return out;
}

bool divides(const Polynomial& g, const Polynomial& f) { return nonisog::divmod(f, g).remainder.is_zero(); }

}  // namespace

std::vector<std::pair<Polynomial, unsigned>> brute_force_factor(const Polynomial& f) {
  std::vector<Polynomial> parts;
  Polynomial work = integral_primitive(f);
  while (work.degree() > 0) {
    bool found = false;
    const Integer a0(work[0]);
    const Integer an(work.leading_coefficient());
    if (a0 == 0) {
      parts.push_back(Polynomial::variable());
      work = nonisog::divmod(work, Polynomial::variable()).quotient;
      continue;
    }
    for (const Integer& p : divisors(a0)) {
      for (const Integer& q : divisors(an)) {
        for (int sign : {1, -1}) {
          Rational r(p * sign, q);
          r.canonicalize();
          if (!found && work.evaluate(r) == 0) {
            const Polynomial lin = Polynomial::from_integers({0, 1}) - Polynomial::constant(r);
            parts.push_back(lin);
            work = integral_primitive(nonisog::divmod(work, lin).quotient);
            found = true;
          }
        }
      }
    }
    if (found) continue;
    if (work.degree() == 4) {
      Rational norm2 = 0;
      for (const Rational& c : work.coefficients()) norm2 += c * c;
      const long bound = 2 * static_cast<long>(std::ceil(std::sqrt(norm2.get_d()))) + 1;
      for (const Integer& a : divisors(an)) {
        for (const Integer& c0 : divisors(a0)) {
          for (int sign : {1, -1}) {
            for (long b = -bound; b <= bound && !found; ++b) {
              Polynomial quad(std::vector<Rational>{Rational(c0 * sign), Rational(b), Rational(a)});
              if (divides(quad, work)) {
                parts.push_back(quad.monic());
                work = integral_primitive(nonisog::divmod(work, quad).quotient);
                found = true;
              }
            }
          }
        }
      }
    }
    if (!found) {
      parts.push_back(work.monic());
      break;
    }
  }
  std::map<std::pair<int, std::string>, std::pair<Polynomial, unsigned>> grouped;
  for (const Polynomial& p : parts) {
    auto [it, inserted] = grouped.try_emplace({p.degree(), p.to_string()}, p, 0u);
    ++it->second.second;
  }
  std::vector<std::pair<Polynomial, unsigned>> out;
  for (auto& [key, value] : grouped) out.push_back(value);
  return out;
}

bool is_refinement(std::vector<int> fine, std::vector<int> coarse) {
  std::sort(fine.rbegin(), fine.rend());
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == fine.size()) return std::all_of(coarse.begin(), coarse.end(), [](int c) { return c == 0; });
    for (auto& c : coarse) {
      if (c >= fine[i]) {
        c -= fine[i];
        if (place(i + 1)) return true;
        c += fine[i];
      }
    }
    return false;
  };
  return place(0);
}

Rational j_from_invariants(const Polynomial& cubic) {
  const Polynomial g = cubic.monic();  // y^2 = c g(x) is a twist of y^2 = g(x)
  const Rational a2 = g[2], a4 = g[1], a6 = g[0];
  const Rational b2 = 4 * a2, b4 = 2 * a4, b6 = 4 * a6;
  const Rational b8 = 4 * a2 * a6 - a4 * a4;
  const Rational c4 = b2 * b2 - 24 * b4;
  const Rational delta = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
  Rational j = c4 * c4 * c4 / delta;
  j.canonicalize();
  return j;
}

bool heart_simple_by_subspaces(int n, const std::vector<nonisog::Permutation>& gens) {
  const int dim = n - 1;
  const unsigned count = 1u << dim;
  auto act = [&](const nonisog::Permutation& g, unsigned k) {
    unsigned full = k | (static_cast<unsigned>(__builtin_popcount(k) & 1) << dim);
    unsigned image = 0;
    for (int i = 0; i < n; ++i) {
      if ((full >> i) & 1u) image |= 1u << g(i);
    }
    return image & (count - 1);
  };
  std::set<std::uint64_t> seen{1};
  std::vector<std::uint64_t> queue{1};
  while (!queue.empty()) {
    const std::uint64_t s = queue.back();
    queue.pop_back();
    for (unsigned v = 1; v < count; ++v) {
      if ((s >> v) & 1u) continue;
      std::uint64_t t = s;
      for (unsigned u = 0; u < count; ++u) {
        if ((s >> u) & 1u) t |= std::uint64_t{1} << (u ^ v);
      }
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  int invariant = 0;
  for (std::uint64_t s : seen) {
    bool stable = true;
    for (unsigned u = 0; u < count && stable; ++u) {
      if (!((s >> u) & 1u)) continue;
      for (const auto& g : gens) {
        if (!((s >> act(g, u)) & 1u)) {
          stable = false;
          break;
        }
      }
    }
    if (stable) ++invariant;
  }
  return invariant == 2;
}

int commutant_dim_by_enumeration(const nonisog::HeartModule& module) {
  const int d = module.dim;
  const std::uint64_t total = std::uint64_t{1} << (d * d);
  auto bit = [d](std::uint64_t x, int r, int c) { return static_cast<int>((x >> (r * d + c)) & 1u); };
  std::uint64_t commuting = 0;
  for (std::uint64_t x = 0; x < total; ++x) {
    bool ok = true;
    for (const auto& a : module.generators) {
      for (int r = 0; r < d && ok; ++r) {
        for (int c = 0; c < d && ok; ++c) {
          int xa = 0, ax = 0;
          for (int k = 0; k < d; ++k) {
            xa ^= bit(x, r, k) & static_cast<int>(a.get(k, c));
            ax ^= static_cast<int>(a.get(r, k)) & bit(x, k, c);
          }
          ok = xa == ax;
        }
      }
      if (!ok) break;
    }
    if (ok) ++commuting;
  }
  int log = 0;
  while ((std::uint64_t{1} << log) < commuting) ++log;
  return log;
}

std::size_t group_order(const std::vector<nonisog::Permutation>& gens) {
  std::set<nonisog::Permutation> seen{nonisog::Permutation::identity(gens.front().size())};
  std::vector<nonisog::Permutation> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    const nonisog::Permutation p = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      nonisog::Permutation q = g * p;
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen.size();
}

SuiteResult resultant_sylvester_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Polynomial f = random_rational_poly(rng, static_cast<int>(uniform(rng, 1, 6)), 9);
    const Polynomial g = random_rational_poly(rng, static_cast<int>(uniform(rng, 1, 6)), 9);
    const Rational got = nonisog::resultant(f, g);
    const Rational want = sylvester_resultant(f, g);
    if (got != want) r.fail("Res(" + f.to_string() + ", " + g.to_string() + ") = " + nonisog::to_string(got) +
                            ", Sylvester gives " + nonisog::to_string(want));
  }
  return r;
}

SuiteResult discriminant_multiplicativity_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Polynomial f = random_int_poly(rng, static_cast<int>(uniform(rng, 2, 4)), -9, 9);
    const Polynomial g = random_int_poly(rng, static_cast<int>(uniform(rng, 2, 4)), -9, 9);
    const Rational res = sylvester_resultant(f, g);
    const Rational lhs = nonisog::discriminant(f * g);
    const Rational rhs = nonisog::discriminant(f) * nonisog::discriminant(g) * res * res;
    if (lhs != rhs) r.fail("disc(fg) mismatch for f = " + f.to_string() + ", g = " + g.to_string());
  }
  return r;
}

namespace {

Polynomial random_squarefree_cubic(Rng& rng) {
  for (;;) {
    Polynomial f = random_rational_poly(rng, 3, 12);
    if (nonisog::discriminant(f) != 0) return f;
  }
}

Rational random_nonzero_rational(Rng& rng, long bound) {
  Rational q(uniform(rng, 1, bound) * (uniform(rng, 0, 1) ? 1 : -1), uniform(rng, 1, bound));
  q.canonicalize();
  return q;
}

}  // namespace

SuiteResult j_isomorphism_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Polynomial f = random_squarefree_cubic(rng);
    const Rational lambda = random_nonzero_rational(rng, 7);
    const Rational mu = random_nonzero_rational(rng, 7);
    const Rational c = Rational(uniform(rng, -20, 20), uniform(rng, 1, 5));
    // y^2 = mu f(lambda x + c) is isomorphic to y^2 = f(x) over Q-bar.
    Polynomial lin(std::vector<Rational>{c, lambda});
    Polynomial g = f.compose(lin);
    g *= mu;
    const Rational jf = nonisog::j_invariant(f).value;
    if (jf != j_from_invariants(f)) r.fail("j(" + f.to_string() + ") disagrees with the c4/Delta formula");
    if (nonisog::j_invariant(g).value != jf) r.fail("j not invariant under x -> lambda x + c, twist: " + f.to_string());
  }
  return r;
}

SuiteResult j_translation_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Polynomial f = random_squarefree_cubic(rng);
    Rational c(uniform(rng, -50, 50), uniform(rng, 1, 9));
    c.canonicalize();
    if (nonisog::j_invariant(f.shifted(c)).value != nonisog::j_invariant(f).value) {
      r.fail("j(f(x + " + nonisog::to_string(c) + ")) != j(f) for f = " + f.to_string());
    }
  }
  return r;
}

SuiteResult parser_round_trip_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const long kind = uniform(rng, 0, 9);
    Polynomial p = kind == 0 ? Polynomial() : random_rational_poly(rng, static_cast<int>(uniform(rng, 0, 8)), 40);
    if (kind == 1) p = p * Polynomial::from_integers({0, 0, 1});  // zero low coefficients
    try {
      const Polynomial back = nonisog::parse_polynomial(p.to_string());
      if (back != p) r.fail("'" + p.to_string() + "' reparsed as '" + back.to_string() + "'");
    } catch (const std::exception& e) {
      r.fail("'" + p.to_string() + "' failed to parse: " + e.what());
    }
  }
  return r;
}

SuiteResult factor_reconstruction_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    Polynomial f;
    if (i % 2 == 0) {
      f = random_int_poly(rng, static_cast<int>(uniform(rng, 1, 8)), -50, 50);
    } else {
      // Products of small factors, with repeats, up to degree 8.
      f = Polynomial::constant(uniform(rng, 1, 6));
      while (f.degree() < 8) {
        const int d = static_cast<int>(uniform(rng, 1, std::min(3, 8 - f.degree())));
        Polynomial g = random_int_poly(rng, d, -6, 6);
        if (f.degree() + 2 * d <= 8 && uniform(rng, 0, 2) == 0) g = g * g;
        if (f.degree() + g.degree() > 8) break;
        f = f * g;
        if (uniform(rng, 0, 3) == 0) break;
      }
      if (f.degree() < 1) f = f * Polynomial::from_integers({1, 1});
    }
    const nonisog::FactorList fl = nonisog::factor_over_Q(f);
    if (fl.expand() != f) r.fail("unit * prod factors != f for " + f.to_string());
    for (const auto& fac : fl.factors) {
      if (!fac.factor.is_monic() || fac.factor.degree() < 1) r.fail("non-monic or constant factor of " + f.to_string());
    }
  }
  return r;
}

SuiteResult factor_oracle_suite(int cases, std::uint64_t seed) {
  Rng rng(seed);
  SuiteResult r;
  for (int i = 0; i < cases; ++i, ++r.cases) {
    Polynomial f;
    if (i % 3 == 2) {
      f = random_int_poly(rng, static_cast<int>(uniform(rng, 1, 2)), -4, 4) *
          random_int_poly(rng, static_cast<int>(uniform(rng, 1, 2)), -4, 4);
    } else {
      f = random_int_poly(rng, static_cast<int>(uniform(rng, 1, 4)), -8, 8);
    }
    const auto want = brute_force_factor(f);
    const nonisog::FactorList fl = nonisog::factor_over_Q(f);
    std::vector<std::pair<Polynomial, unsigned>> got;
    for (const auto& fac : fl.factors) got.emplace_back(fac.factor, fac.multiplicity);
    std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
      return std::make_pair(a.first.degree(), a.first.to_string()) < std::make_pair(b.first.degree(), b.first.to_string());
    });
    if (got != want) r.fail("factorization of " + f.to_string() + " disagrees with the brute-force search");
  }
  return r;
}

SuiteResult fault_injection_suite(const std::string& corpus_path) {
  SuiteResult r;
  const auto cases = nonisog::load_corpus(corpus_path);
  for (const auto& c : cases) {
    const Polynomial f = nonisog::parse_polynomial(c.f);
    const Polynomial h = c.h ? nonisog::parse_polynomial(*c.h) : f;
    const nonisog::Certificate base = nonisog::certify(f, h);
    if (!nonisog::chain_is_sound(base)) r.fail(c.name + ": baseline chain not sound");
    std::set<std::string> names;
    for (const auto& hyp : base.trace) names.insert(hyp.name);
    for (const auto& name : names) {
      ++r.cases;
      nonisog::CertifyOptions opts;
      opts.force_fail = name;
      const nonisog::Certificate flipped = nonisog::certify(f, h, opts);
      if (flipped.verdict.tag != nonisog::VerdictTag::Inconclusive) {
        r.fail(c.name + ": forcing " + name + " to fail still gave " + std::string(to_string(flipped.verdict.tag)));
      }
      const bool recorded = std::any_of(flipped.trace.begin(), flipped.trace.end(), [&](const nonisog::Hypothesis& h) {
        return h.name == name && h.status == nonisog::HypothesisStatus::Failed;
      });
      if (!recorded) r.fail(c.name + ": forced failure of " + name + " missing from the trace");
      if (!nonisog::chain_is_sound(flipped)) r.fail(c.name + ": unsound chain after forcing " + name);
    }
  }
  return r;
}

}  // namespace oracle
