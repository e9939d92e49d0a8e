#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace minscaffold {

class FlagComplex2;

/// Sparse vector over Z2: the sorted set of indices holding a 1.
class Z2Vector {
 public:
  Z2Vector() = default;
  /// Indices may be unsorted; repeated indices cancel in pairs.
  explicit Z2Vector(std::vector<std::uint32_t> indices);

  static Z2Vector unit(std::uint32_t index) { return Z2Vector(std::vector<std::uint32_t>{index}); }

  const std::vector<std::uint32_t>& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }
  bool contains(std::uint32_t index) const;
  /// Largest index with a 1 (the "low" entry of a column).
  std::optional<std::uint32_t> low() const {
    if (support_.empty()) return std::nullopt;
    return support_.back();
  }

  Z2Vector& operator^=(const Z2Vector& other);
  friend Z2Vector operator^(Z2Vector a, const Z2Vector& b) { return a ^= b; }
  friend bool operator==(const Z2Vector&, const Z2Vector&) = default;

 private:
  std::vector<std::uint32_t> support_;
};

struct Z2Matrix {
  std::size_t n_rows = 0;
  std::vector<Z2Vector> columns;

  std::size_t n_cols() const { return columns.size(); }
  /// m * x, where x selects columns.
  Z2Vector apply(const Z2Vector& x) const;
  /// Column-wise product this * other (other.n_rows must equal n_cols()).
  Z2Matrix multiply(const Z2Matrix& other) const;
  bool is_zero() const;
};

/// Boundary operator of a dimension <= 2 flag complex. k = 1: rows are
/// vertices, columns are edges. k = 2: rows are edges, columns triangles.
Z2Matrix boundary_matrix(const FlagComplex2& cx, int k);

/// One elementary column operation: column[target] ^= column[source],
/// always with source < target.
struct ColumnOp {
  std::uint32_t target = 0;
  std::uint32_t source = 0;
};

struct ColumnReduction {
  Z2Matrix reduced;
  std::vector<ColumnOp> ops;
  /// pivot_column[r] = column whose low is r, if any.
  std::vector<std::optional<std::uint32_t>> pivot_column;
};

/// Standard left-to-right reduction: afterwards every non-zero column has a
/// distinct low. reduced = m * U with U upper unitriangular (see
/// transform_from_ops).
ColumnReduction column_reduce(const Z2Matrix& m);

/// Rebuilds U from an operation log on `n_cols` columns.
Z2Matrix transform_from_ops(std::span<const ColumnOp> ops, std::size_t n_cols);

std::size_t rank(const Z2Matrix& m);

/// Some x with m * x = b, or nothing when b is outside the column span.
std::optional<Z2Vector> solve_in_span(const Z2Matrix& m, const Z2Vector& b);

/// Reduction that also carries the transform columns V (R = m * V) without
/// keeping an operation log. Used by the persistence reduction.
struct TrackedReduction {
  std::vector<Z2Vector> reduced;
  std::vector<Z2Vector> transform;
  std::vector<std::optional<std::uint32_t>> pivot_column;
};
TrackedReduction reduce_tracked(const Z2Matrix& m, bool keep_transform);

/// Dense bit vector for short vectors that are combined very often
/// (annotations, support vectors).
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  bool any() const;
  /// Parity of the bitwise AND (Z2 inner product).
  bool dot(const BitVector& other) const;
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) { return a.words_ <=> b.words_; }
  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Rank of a list of dense vectors (Gaussian elimination over Z2).
std::size_t rank(std::span<const BitVector> vectors);

}  // namespace minscaffold
