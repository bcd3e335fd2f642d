#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zkw/exactalg/int_matrix.hpp"

namespace zkw {

struct SmithOptions {
  bool track_u = true;
  bool track_v = true;
  /// Also maintain U^{-1} and V^{-1}; used to read coordinates in the transformed bases.
  bool track_inverses = false;
};

/// U * A * V = S with S diagonal. Only the transforms requested in SmithOptions are filled.
struct SmithForm {
  IntVector diagonal;  // length min(rows, cols); positive invariant factors first, then zeros
  std::size_t rank = 0;
  DenseMatrix u, v, u_inv, v_inv;

  IntMatrix s_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix s(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i) s.set(i, i, diagonal[i]);
    return s;
  }

  /// Invariant factors strictly greater than one.
  IntVector torsion() const {
    IntVector t;
    for (std::size_t i = 0; i < rank; ++i)
      if (diagonal[i] > 1) t.push_back(diagonal[i]);
    return t;
  }
};

namespace detail {

inline DenseMatrix dense_identity(std::size_t n) {
  DenseMatrix m(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_dst += q * row_src, touching only the nonzero columns of row_src.
inline void row_axpy(std::vector<Integer>& dst, const std::vector<Integer>& src, const Integer& q) {
  for (std::size_t j = 0; j < src.size(); ++j)
    if (src[j] != 0) dst[j] += q * src[j];
}

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& m, const SmithOptions& opt)
      : a_(m.dense()), rows_(m.rows()), cols_(m.cols()), opt_(opt) {
    if (opt_.track_u) u_ = dense_identity(rows_);
    if (opt_.track_v) v_ = dense_identity(cols_);
    if (opt_.track_inverses) {
      u_inv_ = dense_identity(rows_);
      v_inv_ = dense_identity(cols_);
    }
  }

  SmithForm run() {
    const std::size_t n = std::min(rows_, cols_);
    std::size_t t = 0;
    for (; t < n; ++t) {
      if (!reduce_at(t)) break;
    }
    SmithForm out;
    out.rank = t;
    out.diagonal.assign(n, 0);
    for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a_[i][i];
    out.u = std::move(u_);
    out.v = std::move(v_);
    out.u_inv = std::move(u_inv_);
    out.v_inv = std::move(v_inv_);
    return out;
  }

 private:
  // Smallest-magnitude nonzero entry in the trailing block, ties broken by (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j) {
        const Integer& x = a_[i][j];
        if (x == 0) continue;
        Integer ax = abs_value(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = std::move(ax);
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  bool reduce_at(std::size_t t) {
    for (;;) {
      auto p = find_pivot(t);
      if (!p) return false;
      swap_rows(t, p->first);
      swap_cols(t, p->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (a_[i][t] == 0) continue;
        Integer q = a_[i][t] / a_[t][t];
        if (q != 0) add_row(i, t, -q);
        if (a_[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (a_[t][j] == 0) continue;
        Integer q = a_[t][j] / a_[t][t];
        if (q != 0) add_col(j, t, -q);
        if (a_[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows_ && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols_; ++j)
          if (a_[i][j] != 0 && a_[i][j] % a_[t][t] != 0) {
            bad_row = i;
            break;
          }
      if (bad_row) {
        add_row(t, *bad_row, 1);
        continue;
      }
      if (a_[t][t] < 0) negate_row(t);
      return true;
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a_[i], a_[k]);
    if (opt_.track_u) std::swap(u_[i], u_[k]);
    if (opt_.track_inverses)
      for (auto& row : u_inv_) std::swap(row[i], row[k]);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (auto& row : a_) std::swap(row[j], row[k]);
    if (opt_.track_v)
      for (auto& row : v_) std::swap(row[j], row[k]);
    if (opt_.track_inverses) std::swap(v_inv_[j], v_inv_[k]);
  }

  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& q) {
    row_axpy(a_[dst], a_[src], q);
    if (opt_.track_u) row_axpy(u_[dst], u_[src], q);
    if (opt_.track_inverses)
      for (auto& row : u_inv_)
        if (row[dst] != 0) row[src] -= q * row[dst];
  }

  // col_dst += q * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : a_)
      if (row[src] != 0) row[dst] += q * row[src];
    if (opt_.track_v)
      for (auto& row : v_)
        if (row[src] != 0) row[dst] += q * row[src];
    if (opt_.track_inverses) row_axpy(v_inv_[src], v_inv_[dst], -q);
  }

  void negate_row(std::size_t i) {
    for (auto& x : a_[i]) x = -x;
    if (opt_.track_u)
      for (auto& x : u_[i]) x = -x;
    if (opt_.track_inverses)
      for (auto& row : u_inv_) row[i] = -row[i];
  }

  DenseMatrix a_;
  std::size_t rows_, cols_;
  SmithOptions opt_;
  DenseMatrix u_, v_, u_inv_, v_inv_;
};

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a, SmithOptions opt = {}) {
  return detail::SmithWorker(a, opt).run();
}

inline std::size_t matrix_rank(const IntMatrix& a) {
  if (a.is_zero()) return 0;
  return smith_normal_form(a, {false, false, false}).rank;
}

inline IntVector dense_apply(const DenseMatrix& m, const IntVector& x) {
  IntVector y(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j] != 0 && m[i][j] != 0) y[i] += m[i][j] * x[j];
  return y;
}

/// Outcome of an integer linear solve. `obstruction_row` names the transformed equation
/// that fails when no integer solution exists.
struct IntegerSolution {
  bool solvable = false;
  IntVector x;
  std::size_t obstruction_row = 0;
};

/// Solves A x = b over the integers. The returned x is the SNF-canonical solution:
/// its coordinates along the kernel directions of the column transform are zero.
inline IntegerSolution solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw ValidationError("solve_integer: right-hand side has wrong length");
  IntegerSolution out;
  SmithForm snf = smith_normal_form(a, {true, true, false});
  IntVector ub = dense_apply(snf.u, b);
  IntVector y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.diagonal[i] != 0) {
        out.obstruction_row = i;
        return out;
      }
      y[i] = ub[i] / snf.diagonal[i];
    } else if (ub[i] != 0) {
      out.obstruction_row = i;
      return out;
    }
  }
  out.solvable = true;
  out.x = a.cols() == 0 ? IntVector{} : dense_apply(snf.v, y);
  return out;
}

}  // namespace zkw
