#pragma once

#include <cstddef>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "zkw/errors.hpp"
#include "zkw/integer.hpp"

namespace zkw {

using IntVector = std::vector<Integer>;
using DenseMatrix = std::vector<std::vector<Integer>>;

/// Sparse integer matrix keyed by (row, col). Zero entries are never stored.
class IntMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static IntMatrix from_dense(const DenseMatrix& d, std::size_t cols_if_empty = 0) {
    IntMatrix m(d.size(), d.empty() ? cols_if_empty : d.front().size());
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d[i].size(); ++j)
        if (d[i][j] != 0) m.entries_.emplace(Key{i, j}, d[i][j]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Integer get(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Integer(0) : it->second;
  }

  void set(std::size_t r, std::size_t c, const Integer& v) {
    check_index(r, c);
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  void add(std::size_t r, std::size_t c, const Integer& v) {
    check_index(r, c);
    if (v == 0) return;
    auto [it, inserted] = entries_.try_emplace(Key{r, c}, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) entries_.erase(it);
    }
  }

  const std::map<Key, Integer>& entries() const { return entries_; }

  DenseMatrix dense() const {
    DenseMatrix d(rows_, IntVector(cols_));
    for (const auto& [k, v] : entries_) d[k.first][k.second] = v;
    return d;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (const auto& [k, v] : entries_) t.entries_.emplace(Key{k.second, k.first}, v);
    return t;
  }

  IntVector apply(const IntVector& x) const {
    if (x.size() != cols_) throw ValidationError("IntMatrix::apply: dimension mismatch");
    IntVector y(rows_);
    for (const auto& [k, v] : entries_) y[k.first] += v * x[k.second];
    return y;
  }

  IntMatrix operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw ValidationError("IntMatrix product: dimension mismatch");
    std::vector<std::vector<std::pair<std::size_t, Integer>>> rhs_rows(rhs.rows_);
    for (const auto& [k, v] : rhs.entries_) rhs_rows[k.first].emplace_back(k.second, v);
    IntMatrix out(rows_, rhs.cols_);
    for (const auto& [k, v] : entries_)
      for (const auto& [c, w] : rhs_rows[k.second]) out.add(k.first, c, v * w);
    return out;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

  /// (row, col, value) triplets in row-major order, for debugging dumps.
  std::vector<std::tuple<std::size_t, std::size_t, Integer>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> t;
    t.reserve(entries_.size());
    for (const auto& [k, v] : entries_) t.emplace_back(k.first, k.second, v);
    return t;
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ValidationError("IntMatrix: index out of range");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Integer> entries_;
};

/// Determinant by fraction-free Bareiss elimination; test and invariant helper.
inline Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  DenseMatrix a = m.dense();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace zkw
