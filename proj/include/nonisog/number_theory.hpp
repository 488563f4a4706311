#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nonisog/rational.hpp"

namespace nonisog {

/// Deterministic Miller-Rabin, exact for every n < 2^64. Larger n throw CapabilityError.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct FactorOptions {
  // Trial division covers primes below this bound before Pollard rho takes over.
  std::uint64_t trial_bound = 1u << 16;
};

/// Factorization of |n| (n != 0) into ascending prime powers. Trial division,
/// then Brent-Pollard rho on cofactors that fit in 64 bits. A composite
/// cofactor that does not fit raises CapabilityError ("unfactored"); the
/// routine never returns an unproven factorization.
std::vector<PrimePower> factor_integer(const Integer& n, const FactorOptions& options = {});

/// Squarefree d with n = d * m^2, sign of n preserved. Throws InvalidInput for 0.
Integer squarefree_part(const Integer& n, const FactorOptions& options = {});

/// True iff q is the square of a rational.
bool is_square(const Rational& q);

/// Smallest k >= 1 with a^k = 1 mod n. Requires n >= 2 and gcd(a, n) = 1.
Integer multiplicative_order(const Integer& a, const Integer& n);

/// Requires n an odd prime.
bool is_primitive_root(const Integer& a, const Integer& n);

/// Primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace nonisog
