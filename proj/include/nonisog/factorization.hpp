#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nonisog/polynomial.hpp"

namespace nonisog {

/// Polynomials handled by factor_over_Q (and hence by Trager norms) are capped here.
inline constexpr int kMaxFactorDegree = 32;

/// Dense polynomial over F_p, p an odd prime below 2^31. Coefficients are
/// kept in [0, p) with a nonzero leading coefficient (empty means zero).
class ModPPolynomial {
 public:
  ModPPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coefficients);
  /// Reduction of an integer-coefficient polynomial; throws InvalidInput on denominators.
  static ModPPolynomial reduce(const Polynomial& f, std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::span<const std::uint64_t> coefficients() const noexcept { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  friend bool operator==(const ModPPolynomial&, const ModPPolynomial&) = default;
  friend ModPPolynomial operator*(const ModPPolynomial& a, const ModPPolynomial& b);

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

struct ModPFactor {
  ModPPolynomial factor;  // monic irreducible
  unsigned multiplicity = 1;
};

/// Squarefree decomposition followed by Berlekamp splitting. Factors are monic,
/// sorted by degree then coefficients. Throws InvalidInput for the zero polynomial
/// or an unsupported modulus.
std::vector<ModPFactor> factor_mod_p(const ModPPolynomial& f);

/// Nullity of Q - I for the Berlekamp matrix of a squarefree f, which equals the
/// number of irreducible factors. Throws InvalidInput if f is not squarefree mod p.
int berlekamp_factor_count(const ModPPolynomial& f);

struct LiftedFactors {
  Integer modulus;                 // p^k
  std::vector<Polynomial> factors; // monic, coefficients in (-p^k/2, p^k/2]
};

/// Quadratic Hensel lifting of a mod-p factorization lc(f) * prod(factors) = f
/// to modulus p^k. Factors must be monic and pairwise coprime mod p.
LiftedFactors hensel_lift(const Polynomial& f, std::span<const ModPPolynomial> factors, unsigned k);

/// ceil(2^deg f * ||f||_2 * |lc f|), bounding every coefficient of every integer
/// factor of the integer polynomial f scaled by lc(f).
Integer mignotte_bound(const Polynomial& f);

struct Factor {
  Polynomial factor;  // monic, irreducible over Q
  unsigned multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct FactorList {
  Rational unit;
  std::vector<Factor> factors;

  Polynomial expand() const;
  bool irreducible() const { return factors.size() == 1 && factors[0].multiplicity == 1; }
};

/// Complete factorization over Q: Yun squarefree decomposition, then
/// Berlekamp mod p, Hensel lifting, and Zassenhaus subset recombination per
/// squarefree part. Throws CapabilityError above kMaxFactorDegree.
FactorList factor_over_Q(const Polynomial& f);

/// Yun's algorithm over Q: monic squarefree, pairwise coprime parts a_i with
/// monic(f) = prod a_i^i. Entries with constant a_i are omitted.
std::vector<Factor> squarefree_decomposition(const Polynomial& f);

/// gcd(f, f') constant. Nonzero constants count as squarefree; zero throws InvalidInput.
bool is_squarefree(const Polynomial& f);

/// Irreducibility over Q via factor_over_Q (degree >= 1).
bool is_irreducible(const Polynomial& f);

}  // namespace nonisog
