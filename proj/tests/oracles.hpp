#pragma once

// Independent reference computations used by the unit tests and the
// acceptance binary. Nothing here calls the library's resultant,
// factorization, heart-module or j-invariant code.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nonisog/gf2_module.hpp"
#include "nonisog/polynomial.hpp"

namespace oracle {

using nonisog::Integer;
using nonisog::Polynomial;
using nonisog::Rational;

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);
/// Integer coefficients in [lo, hi], exact degree deg.
Polynomial random_int_poly(Rng& rng, int deg, long lo, long hi);
/// Rational coefficients num/den with num in [-bound, bound], den in [1, bound].
Polynomial random_rational_poly(Rng& rng, int deg, long bound);

/// x^3 - a x^2 - (a + 3) x - 1.
Polynomial shanks(long a);
inline const char* kCyclicQuintic = "x^5 - 110*x^3 - 55*x^2 + 2310*x + 979";

/// Determinant of the Sylvester matrix by exact Gaussian elimination.
Rational sylvester_resultant(const Polynomial& f, const Polynomial& g);

/// Monic irreducible factors with multiplicity, for integer polynomials of
/// degree <= 4: rational roots from the divisor test, then a search over
/// integer quadratics a x^2 + b x + c with a | lc, c | f(0) and |b| under the
/// Mignotte bound. Sorted by (degree, rendering).
std::vector<std::pair<Polynomial, unsigned>> brute_force_factor(const Polynomial& f);

/// Can `fine` be grouped into blocks whose sums are exactly `coarse`?
bool is_refinement(std::vector<int> fine, std::vector<int> coarse);

/// j of y^2 = f(x) from the Weierstrass b- and c-invariants.
Rational j_from_invariants(const Polynomial& cubic);

/// Simplicity of the even-weight submodule of F2^n (n <= 7) under the
/// permutations, by listing every subspace as a 64-bit membership mask.
bool heart_simple_by_subspaces(int n, const std::vector<nonisog::Permutation>& gens);

/// log2 of the number of dim x dim F2 matrices commuting with every generator (dim <= 4).
int commutant_dim_by_enumeration(const nonisog::HeartModule& module);

/// Order of the group generated by gens, by closure.
std::size_t group_order(const std::vector<nonisog::Permutation>& gens);

struct SuiteResult {
  bool passed = true;
  int cases = 0;
  std::string failure;
  void fail(const std::string& what) {
    if (passed) failure = what;
    passed = false;
  }
};

// The property suites shared by the unit tests and the acceptance binary.
SuiteResult resultant_sylvester_suite(int cases, std::uint64_t seed);
SuiteResult discriminant_multiplicativity_suite(int cases, std::uint64_t seed);
SuiteResult j_isomorphism_suite(int cases, std::uint64_t seed);
SuiteResult j_translation_suite(int cases, std::uint64_t seed);
SuiteResult parser_round_trip_suite(int cases, std::uint64_t seed);
SuiteResult factor_reconstruction_suite(int cases, std::uint64_t seed);
SuiteResult factor_oracle_suite(int cases, std::uint64_t seed);
/// Every corpus pair x every hypothesis in its trace, forced to fail.
SuiteResult fault_injection_suite(const std::string& corpus_path);

}  // namespace oracle
