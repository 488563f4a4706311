#include <gtest/gtest.h>

#include "nonisog/errors.hpp"
#include "nonisog/factorization.hpp"
#include "nonisog/number_field.hpp"
#include "nonisog/number_theory.hpp"
#include "nonisog/parser.hpp"
#include "oracles.hpp"

using namespace nonisog;

namespace {

PolyOverK expand(const NumberField& k, const std::vector<KFactor>& factors) {
  PolyOverK prod(k, Polynomial::constant(1));
  for (const auto& f : factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) prod = prod * f.factor;
  }
  return prod;
}

const std::vector<std::string> kFieldPool = {
    "x^3 - 5", "x^3 - x - 1", "x^3 + x^2 - 2*x - 1", "x^3 - x^2 - 4*x - 1", "x^3 - 2*x^2 - 5*x - 1",
    "x^3 - 4*x^2 - 7*x - 1", "x^5 - x - 1", "x^5 + 15*x + 12", oracle::kCyclicQuintic, "x^5 - 2"};

}  // namespace

TEST(NumberField, Arithmetic) {
  const NumberField k(Polynomial::from_integers({-2, 0, 0, 1}));
  const FieldElement t = k.generator();
  EXPECT_EQ(t * t * t, k.from_rational(2));
  EXPECT_EQ(t.inverse(), k.element(Polynomial::from_integers({0, 0, 1})) / k.from_rational(2));
  EXPECT_EQ(t.norm(), Rational(2));
  EXPECT_THROW(k.zero().inverse(), DivisionByZero);
  EXPECT_THROW(NumberField(Polynomial::from_integers({-1, 0, 1})), InvalidInput);
  EXPECT_THROW(NumberField(Polynomial::from_integers({-2, 0, 2})), InvalidInput);
}

TEST(NumberField, TragerCubeRoot) {
  const NumberField k(Polynomial::from_integers({-2, 0, 0, 1}));
  const auto fs = trager_factor(PolyOverK(k, Polynomial::from_integers({-2, 0, 0, 1})));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].factor.degree(), 1);
  EXPECT_EQ(fs[1].factor.degree(), 2);
}

TEST(NumberField, TragerReconstructionOnCorpusPolynomials) {
  for (const auto& field_src : kFieldPool) {
    const NumberField k(parse_polynomial(field_src));
    for (const auto& poly_src : kFieldPool) {
      const Polynomial f = parse_polynomial(poly_src);
      if (k.degree() * f.degree() > 15 && field_src != poly_src) continue;  // keep runtime modest
      const PolyOverK fk(k, f);
      EXPECT_EQ(expand(k, trager_factor(fk)), fk.monic()) << poly_src << " over Q[x]/(" << field_src << ")";
    }
  }
}

TEST(NumberField, TragerReconstructionRandom) {
  oracle::Rng rng(0x7a9e);
  int done = 0;
  while (done < 50) {
    const int d = static_cast<int>(oracle::uniform(rng, 2, 3));
    Polynomial m = oracle::random_int_poly(rng, d, -6, 6).monic();
    if (!is_irreducible(m)) continue;
    const NumberField k(m);
    std::vector<FieldElement> coeffs;
    const int deg = static_cast<int>(oracle::uniform(rng, 1, 3));
    for (int i = 0; i <= deg; ++i) coeffs.push_back(k.element(oracle::random_int_poly(rng, d - 1, -4, 4)));
    if (coeffs.back().is_zero()) continue;
    PolyOverK f(k, coeffs);
    if (done % 3 == 0) f = f * PolyOverK(k, Polynomial::from_integers({1, 1}));  // force a rational factor
    if (done % 5 == 0) f = f * f;                                              // and a repeated one
    EXPECT_EQ(expand(k, trager_factor(f)), f.monic()) << f.to_string();
    ++done;
  }
}

TEST(NumberField, NormMatchesResultant) {
  const NumberField k(Polynomial::from_integers({1, 0, 1}));  // Q(i)
  const PolyOverK f(k, {k.generator(), k.one()});               // x + i
  EXPECT_EQ(norm(f), Polynomial::from_integers({1, 0, 1}));
}

TEST(NumberField, StemPatternsAndRoots) {
  EXPECT_EQ(stem_factor_pattern(parse_polynomial("x^3 - 5")), (std::vector<int>{1, 2}));
  EXPECT_EQ(stem_factor_pattern(parse_polynomial("x^3 + x^2 - 2*x - 1")), (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(stem_factor_pattern(parse_polynomial("x^5 + 15*x + 12")), (std::vector<int>{1, 4}));
  EXPECT_EQ(stem_factor_pattern(parse_polynomial(oracle::kCyclicQuintic)), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(stem_factor_pattern(parse_polynomial("x^5 - 5*x + 12")), (std::vector<int>{1, 2, 2}));
  EXPECT_THROW(stem_factor_pattern(parse_polynomial("x^3 - 1")), InvalidInput);

  const NumberField gauss(parse_polynomial("x^2 + 1"));
  EXPECT_TRUE(has_root_in(gauss, parse_polynomial("x^2 + 4")));
  EXPECT_FALSE(has_root_in(gauss, parse_polynomial("x^2 - 2")));
}

TEST(NumberField, IsomorphismIsReflexiveAndSymmetric) {
  std::vector<NumberField> pool;
  for (const auto& s : kFieldPool) pool.emplace_back(parse_polynomial(s));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    EXPECT_TRUE(fields_isomorphic(pool[i], pool[i]));
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const bool ab = fields_isomorphic(pool[i], pool[j]);
      EXPECT_EQ(ab, fields_isomorphic(pool[j], pool[i]));
      if (ab && pool[i].degree() == pool[j].degree()) {
        // Isomorphic fields have polynomial discriminants in the same square class.
        const Integer di = squarefree_part(discriminant(pool[i].min_poly()).get_num());
        const Integer dj = squarefree_part(discriminant(pool[j].min_poly()).get_num());
        EXPECT_EQ(di, dj);
      }
    }
  }
  // A different generator of Q(cbrt 5): (t + 1) has minimal polynomial (x - 1)^3 - 5.
  EXPECT_TRUE(fields_isomorphic(NumberField(parse_polynomial("x^3 - 5")), NumberField(parse_polynomial("(x - 1)^3 - 5"))));
  // Shanks fields with distinct prime conductors a^2 + 3a + 9 are not isomorphic.
  EXPECT_FALSE(fields_isomorphic(NumberField(oracle::shanks(-1)), NumberField(oracle::shanks(1))));
}
