#include "minscaffold/z2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "minscaffold/complex.hpp"

namespace minscaffold {

Z2Vector::Z2Vector(std::vector<std::uint32_t> indices) {
  std::sort(indices.begin(), indices.end());
  support_.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size();) {
    std::size_t j = i;
    while (j < indices.size() && indices[j] == indices[i]) ++j;
    if ((j - i) % 2 == 1) support_.push_back(indices[i]);
    i = j;
  }
}

bool Z2Vector::contains(std::uint32_t index) const {
  return std::binary_search(support_.begin(), support_.end(), index);
}

Z2Vector& Z2Vector::operator^=(const Z2Vector& other) {
  if (other.support_.empty()) return *this;
  std::vector<std::uint32_t> merged;
  merged.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(),
                                other.support_.end(), std::back_inserter(merged));
  support_.swap(merged);
  return *this;
}

Z2Vector Z2Matrix::apply(const Z2Vector& x) const {
  Z2Vector result;
  for (std::uint32_t j : x.support()) result ^= columns.at(j);
  return result;
}

Z2Matrix Z2Matrix::multiply(const Z2Matrix& other) const {
  if (other.n_rows != n_cols()) throw std::invalid_argument("dimension mismatch in Z2 product");
  Z2Matrix product{n_rows, {}};
  product.columns.reserve(other.n_cols());
  for (const Z2Vector& col : other.columns) product.columns.push_back(apply(col));
  return product;
}

bool Z2Matrix::is_zero() const {
  return std::all_of(columns.begin(), columns.end(), [](const Z2Vector& c) { return c.empty(); });
}

Z2Matrix boundary_matrix(const FlagComplex2& cx, int k) {
  Z2Matrix m;
  if (k == 1) {
    m.n_rows = cx.n_vertices();
    for (const ComplexEdge& e : cx.edges()) m.columns.emplace_back(std::vector<std::uint32_t>{e.u, e.v});
  } else if (k == 2) {
    m.n_rows = cx.n_edges();
    for (const ComplexTriangle& t : cx.triangles()) {
      m.columns.emplace_back(std::vector<std::uint32_t>{t.edges[0], t.edges[1], t.edges[2]});
    }
  } else {
    throw std::invalid_argument("boundary_matrix: k must be 1 or 2");
  }
  return m;
}

namespace {

template <typename OnOp>
std::vector<std::optional<std::uint32_t>> reduce_columns(std::vector<Z2Vector>& cols,
                                                         std::size_t n_rows, OnOp&& on_op) {
  std::vector<std::optional<std::uint32_t>> pivot(n_rows);
  for (std::uint32_t j = 0; j < cols.size(); ++j) {
    while (auto low = cols[j].low()) {
      if (*low >= n_rows) throw std::out_of_range("Z2 column index exceeds row count");
      const auto& owner = pivot[*low];
      if (!owner) {
        pivot[*low] = j;
        break;
      }
      cols[j] ^= cols[*owner];
      on_op(j, *owner);
    }
  }
  return pivot;
}

}  // namespace

ColumnReduction column_reduce(const Z2Matrix& m) {
  ColumnReduction result;
  result.reduced = m;
  result.pivot_column = reduce_columns(result.reduced.columns, m.n_rows,
                                       [&](std::uint32_t target, std::uint32_t source) {
                                         result.ops.push_back({target, source});
                                       });
  return result;
}

Z2Matrix transform_from_ops(std::span<const ColumnOp> ops, std::size_t n_cols) {
  Z2Matrix u{n_cols, {}};
  u.columns.reserve(n_cols);
  for (std::uint32_t j = 0; j < n_cols; ++j) u.columns.push_back(Z2Vector::unit(j));
  for (const ColumnOp& op : ops) u.columns.at(op.target) ^= u.columns.at(op.source);
  return u;
}

TrackedReduction reduce_tracked(const Z2Matrix& m, bool keep_transform) {
  TrackedReduction result;
  result.reduced = m.columns;
  if (keep_transform) {
    result.transform.reserve(m.n_cols());
    for (std::uint32_t j = 0; j < m.n_cols(); ++j) result.transform.push_back(Z2Vector::unit(j));
  }
  result.pivot_column = reduce_columns(result.reduced, m.n_rows,
                                       [&](std::uint32_t target, std::uint32_t source) {
                                         if (keep_transform) {
                                           result.transform[target] ^= result.transform[source];
                                         }
                                       });
  return result;
}

std::size_t rank(const Z2Matrix& m) {
  std::vector<Z2Vector> cols = m.columns;
  const auto pivot = reduce_columns(cols, m.n_rows, [](std::uint32_t, std::uint32_t) {});
  return static_cast<std::size_t>(
      std::count_if(pivot.begin(), pivot.end(), [](const auto& p) { return p.has_value(); }));
}

std::optional<Z2Vector> solve_in_span(const Z2Matrix& m, const Z2Vector& b) {
  if (auto low = b.low(); low && *low >= m.n_rows) {
    throw std::out_of_range("solve_in_span: right-hand side exceeds row count");
  }
  const TrackedReduction red = reduce_tracked(m, true);
  Z2Vector residual = b;
  Z2Vector x;
  while (auto low = residual.low()) {
    const auto& owner = red.pivot_column[*low];
    if (!owner) return std::nullopt;
    residual ^= red.reduced[*owner];
    x ^= red.transform[*owner];
  }
  return x;
}

bool BitVector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVector::dot(const BitVector& other) const {
  std::uint64_t acc = 0;
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.bits_ != bits_) throw std::invalid_argument("BitVector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t BitVector::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ bits_;
  for (std::uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::size_t rank(std::span<const BitVector> vectors) {
  std::vector<BitVector> basis;  // kept with distinct leading bits
  std::vector<std::size_t> leads;
  for (BitVector v : vectors) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (v.test(leads[i])) v ^= basis[i];
    }
    if (!v.any()) continue;
    std::size_t lead = 0;
    while (!v.test(lead)) ++lead;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].test(lead)) basis[i] ^= v;
    }
    basis.push_back(std::move(v));
    leads.push_back(lead);
  }
  return basis.size();
}

}  // namespace minscaffold
