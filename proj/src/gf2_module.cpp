#include "nonisog/gf2_module.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <sstream>

#include "nonisog/errors.hpp"
#include "nonisog/number_theory.hpp"

namespace nonisog {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) throw InvalidInput("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return Permutation(std::move(v));
}

Permutation Permutation::cycle(int n, std::initializer_list<int> points) {
  return from_cycles(n, {std::vector<int>(points)});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k] - 1;
      const int to = c[(k + 1) % c.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw InvalidInput("cycle point out of range");
      v[from] = to;
    }
  }
  return Permutation(std::move(v));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("composing permutations of different degree");
  std::vector<int> v(a.size());
  for (int i = 0; i < a.size(); ++i) v[i] = a(b(i));
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 0; i < size(); ++i) v[images_[i]] = i;
  return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out << "(";
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out << " ";
      out << j + 1;
    }
    out << ")";
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols), rows_(rows, 0) {
  if (rows < 0 || cols < 0 || cols > 64) throw InvalidInput("BitMatrix supports at most 64 columns");
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[i] = BitVector{1} << i;
  return m;
}

BitMatrix BitMatrix::from_columns(int rows, std::span<const BitVector> images) {
  BitMatrix m(rows, static_cast<int>(images.size()));
  for (int c = 0; c < m.cols_; ++c)
    for (int r = 0; r < rows; ++r)
      if ((images[c] >> r) & 1u) m.rows_[r] |= BitVector{1} << c;
  return m;
}

void BitMatrix::set(int r, int c, bool value) {
  if (value) {
    rows_[r] |= BitVector{1} << c;
  } else {
    rows_[r] &= ~(BitVector{1} << c);
  }
}

void BitMatrix::set_row(int r, BitVector bits) { rows_[r] = bits; }

BitVector BitMatrix::column(int c) const {
  BitVector out = 0;
  for (int r = 0; r < rows(); ++r) out |= ((rows_[r] >> c) & 1u) << r;
  return out;
}

BitVector BitMatrix::apply(BitVector v) const {
  BitVector out = 0;
  for (int r = 0; r < rows(); ++r) out |= static_cast<BitVector>(std::popcount(rows_[r] & v) & 1) << r;
  return out;
}

int BitMatrix::rank() const {
  std::array<BitVector, 64> pivot{};
  int rank = 0;
  for (BitVector w : rows_) {
    while (w) {
      const int b = 63 - std::countl_zero(w);
      if (!pivot[b]) {
        pivot[b] = w;
        ++rank;
        break;
      }
      w ^= pivot[b];
    }
  }
  return rank;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("BitMatrix dimension mismatch");
  BitMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    BitVector acc = 0;
    BitVector bits = a.rows_[r];
    while (bits) {
      const int k = std::countr_zero(bits);
      acc ^= b.rows_[k];
      bits &= bits - 1;
    }
    out.rows_[r] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Heart module

BitMatrix heart_matrix(int n, const Permutation& g) {
  if (g.size() != n) throw InvalidInput("permutation degree does not match n");
  const int dim = n - 1;
  const int last = n - 1;
  std::vector<BitVector> images(dim);
  // g(v_i) = e_{g(i)} + e_{g(n)}; with v_i = e_i + e_n this is
  //   v_{g(i)}                 if g(n) = n,
  //   v_{g(n)}                 if g(i) = n,
  //   v_{g(i)} + v_{g(n)}      otherwise.
  for (int i = 0; i < dim; ++i) {
    const int gi = g(i);
    const int gn = g(last);
    BitVector img = 0;
    if (gi != last) img ^= BitVector{1} << gi;
    if (gn != last) img ^= BitVector{1} << gn;
    images[i] = img;
  }
  return BitMatrix::from_columns(dim, images);
}

HeartModule heart_module(int n, std::span<const Permutation> generators) {
  if (n < 3 || n % 2 == 0) throw InvalidInput("heart module needs odd n >= 3, got " + std::to_string(n));
  if (n - 1 > 64) throw CapabilityError("heart module dimension above 64");
  if (generators.empty()) throw InvalidInput("heart module needs at least one generator");
  HeartModule m{n, n - 1, {}};
  for (const auto& g : generators) m.generators.push_back(heart_matrix(n, g));
  return m;
}

namespace {

// Column form of the generators for the inner spin loop.
class SpinKernel {
 public:
  explicit SpinKernel(const HeartModule& m) : dim_(m.dim) {
    for (const auto& g : m.generators) {
      std::array<BitVector, 64> cols{};
      for (int j = 0; j < dim_; ++j) cols[j] = g.column(j);
      cols_.push_back(cols);
    }
  }

  BitVector apply(std::size_t g, BitVector v) const {
    BitVector r = 0;
    while (v) {
      r ^= cols_[g][std::countr_zero(v)];
      v &= v - 1;
    }
    return r;
  }

  // Dimension of the cyclic submodule of v; optionally its echelon basis.
  int span_dim(BitVector v, std::vector<BitVector>* basis = nullptr) const {
    std::array<BitVector, 64> pivot{};
    std::array<BitVector, 64> queue{};
    int head = 0, tail = 0;
    auto insert = [&](BitVector w) {
      while (w) {
        const int b = 63 - std::countl_zero(w);
        if (!pivot[b]) {
          pivot[b] = w;
          return true;
        }
        w ^= pivot[b];
      }
      return false;
    };
    insert(v);
    queue[tail++] = v;
    while (head < tail && tail < dim_) {
      const BitVector w = queue[head++];
      for (std::size_t g = 0; g < cols_.size() && tail < dim_; ++g) {
        const BitVector u = apply(g, w);
        if (insert(u)) queue[tail++] = u;
      }
    }
    if (basis) {
      for (int b = 63; b >= 0; --b)
        if (pivot[b]) basis->push_back(pivot[b]);
    }
    return tail;
  }

 private:
  int dim_;
  std::vector<std::array<BitVector, 64>> cols_;
};

void check_exhaustive(const HeartModule& m) {
  if (m.dim > kMaxExhaustiveDim) {
    throw CapabilityError("exhaustive spin limited to dimension " + std::to_string(kMaxExhaustiveDim) + ", got " +
                          std::to_string(m.dim));
  }
}

std::optional<BitVector> find_proper_serial(const HeartModule& m) {
  const SpinKernel k(m);
  const BitVector end = BitVector{1} << m.dim;
  for (BitVector v = 1; v < end; ++v) {
    if (k.span_dim(v) < m.dim) return v;
  }
  return std::nullopt;
}

std::optional<BitVector> find_proper_parallel(const HeartModule& m) {
  const SpinKernel k(m);
  const long long end = static_cast<long long>(1) << m.dim;
  // Smallest witness wins, so the answer does not depend on scheduling.
  std::atomic<long long> best{end};
#pragma omp parallel for schedule(dynamic, 256)
  for (long long v = 1; v < end; ++v) {
    if (v >= best.load(std::memory_order_relaxed)) continue;
    if (k.span_dim(static_cast<BitVector>(v)) < m.dim) {
      long long cur = best.load();
      while (v < cur && !best.compare_exchange_weak(cur, v)) {
      }
    }
  }
  if (best.load() == end) return std::nullopt;
  return static_cast<BitVector>(best.load());
}

ModuleReport make_report(const HeartModule& m, std::optional<BitVector> witness) {
  ModuleReport r;
  r.simple = !witness.has_value();
  r.witness = witness;
  r.endomorphism_dim = endomorphism_dimension(m);
  r.absolutely_simple = r.simple && r.endomorphism_dim == 1;
  return r;
}

}  // namespace

BitMatrix spin(const HeartModule& module, BitVector v) {
  if (v == 0) throw InvalidInput("spin of the zero vector");
  if (module.dim < 64 && (v >> module.dim) != 0) throw InvalidInput("vector wider than the module");
  std::vector<BitVector> basis;
  SpinKernel(module).span_dim(v, &basis);
  BitMatrix out(static_cast<int>(basis.size()), module.dim);
  for (std::size_t i = 0; i < basis.size(); ++i) out.set_row(static_cast<int>(i), basis[i]);
  return out;
}

bool is_simple_serial(const HeartModule& module) {
  check_exhaustive(module);
  return !find_proper_serial(module).has_value();
}

bool is_simple(const HeartModule& module) {
  check_exhaustive(module);
  return !find_proper_parallel(module).has_value();
}

int endomorphism_dimension(const HeartModule& module) {
  const int d = module.dim;
  const int vars = d * d;
  const int words = (vars + 63) / 64;
  auto var = [d](int i, int k) { return i * d + k; };
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& a : module.generators) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        // (XA - AX)_{ij} = sum_k X_ik A_kj + sum_k A_ik X_kj over F2
        std::vector<std::uint64_t> row(words, 0);
        for (int k = 0; k < d; ++k) {
          if (a.get(k, j)) row[var(i, k) / 64] ^= std::uint64_t{1} << (var(i, k) % 64);
          if (a.get(i, k)) row[var(k, j) / 64] ^= std::uint64_t{1} << (var(k, j) % 64);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  int rank = 0;
  for (int col = 0; col < vars && rank < static_cast<int>(rows.size()); ++col) {
    const int w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t sel = rank;
    while (sel < rows.size() && !(rows[sel][w] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || !(rows[r][w] & bit)) continue;
      for (int x = 0; x < words; ++x) rows[r][x] ^= rows[rank][x];
    }
    ++rank;
  }
  return vars - rank;
}

ModuleReport analyze(const HeartModule& module) {
  check_exhaustive(module);
  return make_report(module, find_proper_parallel(module));
}

ModuleReport analyze_serial(const HeartModule& module) {
  check_exhaustive(module);
  return make_report(module, find_proper_serial(module));
}

// ---------------------------------------------------------------------------
// Standard generators

namespace {

Permutation long_cycle(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
  return Permutation(std::move(v));
}

}  // namespace

std::vector<Permutation> standard_generators(std::string_view tag, int n) {
  auto bad = [&] {
    return InvalidInput("incompatible group '" + std::string(tag) + "' with n = " + std::to_string(n));
  };
  if (tag.size() < 2) throw bad();
  int number = 0;
  const auto [ptr, ec] = std::from_chars(tag.data() + 1, tag.data() + tag.size(), number);
  if (ec != std::errc() || ptr != tag.data() + tag.size()) throw bad();
  const char family = tag[0];
  switch (family) {
    case 'C':
      if (number != n || n < 3 || n % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(n))) throw bad();
      return {long_cycle(n)};
    case 'S':
      if (number != n || (n != 3 && n != 5)) throw bad();
      return {Permutation::cycle(n, {1, 2}), long_cycle(n)};
    case 'A':
      if (number != 5 || n != 5) throw bad();
      return {Permutation::cycle(5, {1, 2, 3}), long_cycle(5)};
    case 'D':
      if (number != 5 || n != 5) throw bad();
      return {long_cycle(5), Permutation::from_cycles(5, {{2, 5}, {3, 4}})};
    case 'F':
      if (number != 20 || n != 5) throw bad();
      return {long_cycle(5), Permutation::cycle(5, {2, 3, 5, 4})};
    default:
      throw bad();
  }
}

std::vector<Permutation> standard_generators(GaloisGroupId id) {
  return standard_generators(to_string(id), permutation_degree(id));
}

}  // namespace nonisog
