#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "nonisog/polynomial.hpp"

namespace nonisog {

/// Transitive Galois groups of irreducible cubics and quintics, plus a tag
/// for inputs that factor over Q.
enum class GaloisGroupId { C3, S3, C5, D5, F20, A5, S5, Reducible };

std::string_view to_string(GaloisGroupId id);
std::optional<GaloisGroupId> parse_galois_group(std::string_view text);

struct GroupProperties {
  Integer order;
  bool doubly_transitive = false;
  bool cyclic_of_order_n = false;
  bool has_Cn_quotient = false;
  friend bool operator==(const GroupProperties&, const GroupProperties&) = default;
};

/// Static table. Throws InvalidInput for Reducible.
GroupProperties group_properties(GaloisGroupId id);
/// Number of permuted roots (3 or 5). Throws InvalidInput for Reducible.
int permutation_degree(GaloisGroupId id);
/// Whether the group sits inside the alternating group on the roots.
bool is_even_group(GaloisGroupId id);

/// Reducible, C3 (square discriminant) or S3. Throws InvalidInput for a
/// wrong degree or repeated roots.
GaloisGroupId galois_cubic(const Polynomial& f);

/// Reducible, or identification from the stem-field factorization pattern,
/// the discriminant square class, and, for pattern {1,4} with non-square
/// discriminant, whether the resolvent cubic of the quartic factor has a root
/// in the stem field (F20) or not (S5).
GaloisGroupId galois_quintic(const Polynomial& f);

/// Dispatches on degree 3 / 5; other degrees throw CapabilityError.
GaloisGroupId galois_group(const Polynomial& f);

/// Cycle lengths of a permutation, sorted descending, e.g. {2, 1, 1, 1}.
using CycleType = std::vector<int>;

/// Every cycle type occurring in the group.
std::set<CycleType> cycle_types(GaloisGroupId id);

/// Degree patterns of f mod p over primes p <= prime_bound not dividing
/// lc(f) * disc(f). Advisory only: the union over sampled primes can show a
/// group is too small but never certifies one. Primes are processed with
/// OpenMP; the result does not depend on scheduling.
std::set<CycleType> cycle_type_prefilter(const Polynomial& f, std::uint64_t prime_bound);
/// Single-threaded reference for cycle_type_prefilter.
std::set<CycleType> cycle_type_prefilter_serial(const Polynomial& f, std::uint64_t prime_bound);

}  // namespace nonisog
