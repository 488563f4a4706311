#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nonisog/galois.hpp"

namespace nonisog {

/// Bijection of {0, ..., n-1}. Constructors taking cycles use the usual
/// 1-based notation, so cycle(5, {2, 3, 5, 4}) is (2 3 5 4).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation cycle(int n, std::initializer_list<int> points);
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// F2 vectors of width <= 64, bit j = coordinate j.
using BitVector = std::uint64_t;

/// Dense F2 matrix with at most 64 columns; row i is a bit-packed word.
class BitMatrix {
 public:
  BitMatrix(int rows, int cols);
  static BitMatrix identity(int n);
  /// Column j of the result is images[j].
  static BitMatrix from_columns(int rows, std::span<const BitVector> images);

  int rows() const noexcept { return static_cast<int>(rows_.size()); }
  int cols() const noexcept { return cols_; }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool value);
  BitVector row(int r) const { return rows_[r]; }
  void set_row(int r, BitVector bits);
  BitVector column(int c) const;

  BitVector apply(BitVector v) const;
  int rank() const;
  bool invertible() const { return rows() == cols() && rank() == cols(); }

  friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int cols_;
  std::vector<BitVector> rows_;
};

/// Sum-zero subspace of F2^n under a permutation group, in the basis
/// v_i = e_i + e_n (i = 1..n-1).
struct HeartModule {
  int n = 0;
  int dim = 0;
  std::vector<BitMatrix> generators;
};

/// Matrix of the permutation action on the heart in the v_i basis.
BitMatrix heart_matrix(int n, const Permutation& g);
/// Throws InvalidInput for even n, n < 3, no generators, or size mismatch.
HeartModule heart_module(int n, std::span<const Permutation> generators);

/// Basis (as rows) of the smallest generator-stable subspace containing v.
/// Throws InvalidInput for the zero vector.
BitMatrix spin(const HeartModule& module, BitVector v);

struct ModuleReport {
  bool simple = false;
  int endomorphism_dim = 0;
  bool absolutely_simple = false;
  /// Some nonzero vector whose spin is a proper submodule, when not simple.
  std::optional<BitVector> witness;
};

inline constexpr int kMaxExhaustiveDim = 24;

/// Spins every nonzero vector (OpenMP over the 2^dim - 1 starting vectors)
/// and solves the commutant system for the endomorphism dimension.
/// Throws CapabilityError above kMaxExhaustiveDim.
ModuleReport analyze(const HeartModule& module);
/// Same verdicts, single-threaded spin loop.
ModuleReport analyze_serial(const HeartModule& module);

bool is_simple(const HeartModule& module);
bool is_simple_serial(const HeartModule& module);
/// Dimension over F2 of {X : X A = A X for every generator A}.
int endomorphism_dimension(const HeartModule& module);

/// Standard generators: Cn -> [n-cycle]; S3/S5 -> [(1 2), n-cycle];
/// A5 -> [(1 2 3), (1 2 3 4 5)]; D5 -> [(1 2 3 4 5), (2 5)(3 4)];
/// F20 -> [(1 2 3 4 5), (2 3 5 4)]. Tags are "C<n>" for odd primes n,
/// plus "S3", "S5", "A5", "D5", "F20". Throws InvalidInput for an
/// incompatible (tag, n).
std::vector<Permutation> standard_generators(std::string_view tag, int n);
std::vector<Permutation> standard_generators(GaloisGroupId id);

}  // namespace nonisog
