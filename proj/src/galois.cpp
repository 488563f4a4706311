#include "nonisog/galois.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "nonisog/errors.hpp"
#include "nonisog/factorization.hpp"
#include "nonisog/number_field.hpp"
#include "nonisog/number_theory.hpp"

namespace nonisog {

std::string_view to_string(GaloisGroupId id) {
  switch (id) {
    case GaloisGroupId::C3: return "C3";
    case GaloisGroupId::S3: return "S3";
    case GaloisGroupId::C5: return "C5";
    case GaloisGroupId::D5: return "D5";
    case GaloisGroupId::F20: return "F20";
    case GaloisGroupId::A5: return "A5";
    case GaloisGroupId::S5: return "S5";
    case GaloisGroupId::Reducible: return "Reducible";
  }
  return "?";
}

std::optional<GaloisGroupId> parse_galois_group(std::string_view text) {
  for (auto id : {GaloisGroupId::C3, GaloisGroupId::S3, GaloisGroupId::C5, GaloisGroupId::D5, GaloisGroupId::F20,
                  GaloisGroupId::A5, GaloisGroupId::S5, GaloisGroupId::Reducible}) {
    if (to_string(id) == text) return id;
  }
  return std::nullopt;
}

GroupProperties group_properties(GaloisGroupId id) {
  switch (id) {
    case GaloisGroupId::C3: return {3, false, true, true};
    case GaloisGroupId::S3: return {6, true, false, false};
    case GaloisGroupId::C5: return {5, false, true, true};
    case GaloisGroupId::D5: return {10, false, false, false};
    case GaloisGroupId::F20: return {20, true, false, false};
    case GaloisGroupId::A5: return {60, true, false, false};
    case GaloisGroupId::S5: return {120, true, false, false};
    case GaloisGroupId::Reducible: break;
  }
  throw InvalidInput("no group properties for a reducible polynomial");
}

int permutation_degree(GaloisGroupId id) {
  switch (id) {
    case GaloisGroupId::C3:
    case GaloisGroupId::S3: return 3;
    case GaloisGroupId::Reducible: throw InvalidInput("reducible polynomials have no transitive group");
    default: return 5;
  }
}

bool is_even_group(GaloisGroupId id) {
  return id == GaloisGroupId::C3 || id == GaloisGroupId::C5 || id == GaloisGroupId::D5 || id == GaloisGroupId::A5;
}

namespace {

void require_shape(const Polynomial& f, int degree) {
  if (f.degree() != degree) {
    throw InvalidInput("expected degree " + std::to_string(degree) + ", got " + std::to_string(f.degree()));
  }
  if (!is_squarefree(f)) throw InvalidInput("polynomial has repeated roots: " + f.to_string());
}

// y^3 - c2 y^2 + (c1 c3 - 4 c0) y - (c1^2 + c0 c3^2 - 4 c0 c2) for a monic quartic.
PolyOverK resolvent_cubic(const PolyOverK& quartic) {
  const NumberField& k = quartic.field();
  const FieldElement c0 = quartic.coefficient(0), c1 = quartic.coefficient(1), c2 = quartic.coefficient(2),
                     c3 = quartic.coefficient(3);
  const FieldElement four = k.from_rational(4);
  return PolyOverK(k, std::vector<FieldElement>{-(c1 * c1 + c0 * c3 * c3 - four * c0 * c2), c1 * c3 - four * c0, -c2,
                                                k.one()});
}

}  // namespace

GaloisGroupId galois_cubic(const Polynomial& f) {
  require_shape(f, 3);
  if (!is_irreducible(f)) return GaloisGroupId::Reducible;
  return is_square(discriminant(f)) ? GaloisGroupId::C3 : GaloisGroupId::S3;
}

GaloisGroupId galois_quintic(const Polynomial& f) {
  require_shape(f, 5);
  if (!is_irreducible(f)) return GaloisGroupId::Reducible;
  const bool even = is_square(discriminant(f));

  const Polynomial m = f.monic();
  const NumberField k(m);
  const auto pieces = trager_factor(PolyOverK(k, m));
  std::vector<int> pattern;
  for (const auto& piece : pieces) pattern.push_back(piece.factor.degree());
  std::sort(pattern.begin(), pattern.end());

  auto inconsistent = [&](const std::string& why) {
    std::string p;
    for (int d : pattern) p += std::to_string(d) + " ";
    return InternalInconsistency("quintic " + f.to_string() + ": stem pattern { " + p + "} " + why);
  };

  if (pattern == std::vector<int>{1, 1, 1, 1, 1}) {
    if (!even) throw inconsistent("with non-square discriminant");
    return GaloisGroupId::C5;
  }
  if (pattern == std::vector<int>{1, 2, 2}) {
    if (!even) throw inconsistent("with non-square discriminant");
    return GaloisGroupId::D5;
  }
  if (pattern == std::vector<int>{1, 4}) {
    if (even) return GaloisGroupId::A5;
    const auto quartic = std::find_if(pieces.begin(), pieces.end(), [](const KFactor& x) { return x.factor.degree() == 4; });
    const PolyOverK cubic = resolvent_cubic(quartic->factor);
    for (const auto& r : trager_factor(cubic)) {
      if (r.factor.degree() == 1) return GaloisGroupId::F20;
    }
    return GaloisGroupId::S5;
  }
  throw inconsistent("is impossible for a transitive group of degree 5");
}

GaloisGroupId galois_group(const Polynomial& f) {
  switch (f.degree()) {
    case 3: return galois_cubic(f);
    case 5: return galois_quintic(f);
    default: throw CapabilityError("Galois identification supports degrees 3 and 5 only, got " + std::to_string(f.degree()));
  }
}

std::set<CycleType> cycle_types(GaloisGroupId id) {
  switch (id) {
    case GaloisGroupId::C3: return {{1, 1, 1}, {3}};
    case GaloisGroupId::S3: return {{1, 1, 1}, {2, 1}, {3}};
    case GaloisGroupId::C5: return {{1, 1, 1, 1, 1}, {5}};
    case GaloisGroupId::D5: return {{1, 1, 1, 1, 1}, {5}, {2, 2, 1}};
    case GaloisGroupId::F20: return {{1, 1, 1, 1, 1}, {5}, {2, 2, 1}, {4, 1}};
    case GaloisGroupId::A5: return {{1, 1, 1, 1, 1}, {5}, {2, 2, 1}, {3, 1, 1}};
    case GaloisGroupId::S5:
      return {{1, 1, 1, 1, 1}, {5}, {2, 2, 1}, {3, 1, 1}, {2, 1, 1, 1}, {4, 1}, {3, 2}};
    case GaloisGroupId::Reducible: break;
  }
  throw InvalidInput("no cycle types for a reducible polynomial");
}

namespace {

struct PrefilterInput {
  Polynomial integral;  // primitive integer multiple of f
  Integer bad;          // lc * disc
  std::vector<std::uint64_t> primes;
};

PrefilterInput prepare_prefilter(const Polynomial& f, std::uint64_t prime_bound) {
  if (f.degree() < 2) throw InvalidInput("cycle_type_prefilter needs degree >= 2");
  if (!is_squarefree(f)) throw InvalidInput("cycle_type_prefilter needs a squarefree polynomial");
  PrefilterInput in;
  in.integral = Polynomial::from_integers(primitive_part(f));
  in.bad = in.integral.leading_coefficient().get_num() * discriminant(in.integral).get_num();
  in.primes = primes_in_range(3, prime_bound);
  return in;
}

std::optional<CycleType> pattern_at(const PrefilterInput& in, std::uint64_t p) {
  if (mpz_divisible_ui_p(in.bad.get_mpz_t(), p)) return std::nullopt;
  CycleType t;
  for (const auto& piece : factor_mod_p(ModPPolynomial::reduce(in.integral, p))) {
    for (unsigned e = 0; e < piece.multiplicity; ++e) t.push_back(piece.factor.degree());
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

}  // namespace

std::set<CycleType> cycle_type_prefilter_serial(const Polynomial& f, std::uint64_t prime_bound) {
  const PrefilterInput in = prepare_prefilter(f, prime_bound);
  std::set<CycleType> out;
  for (std::uint64_t p : in.primes) {
    if (auto t = pattern_at(in, p)) out.insert(std::move(*t));
  }
  return out;
}

std::set<CycleType> cycle_type_prefilter(const Polynomial& f, std::uint64_t prime_bound) {
  const PrefilterInput in = prepare_prefilter(f, prime_bound);
  const long count = static_cast<long>(in.primes.size());
  std::vector<std::optional<CycleType>> slots(in.primes.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) slots[i] = pattern_at(in, in.primes[i]);
  std::set<CycleType> out;
  for (auto& s : slots) {
    if (s) out.insert(std::move(*s));
  }
  return out;
}

}  // namespace nonisog
