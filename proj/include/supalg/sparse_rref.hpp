#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "supalg/matrix.hpp"

namespace supalg {

/// Sparse row: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

inline SparseRow dense_to_sparse(const RatVector& v) {
  SparseRow r;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0) r.emplace_back(j, v[j]);
  return r;
}

inline RatVector sparse_to_dense(const SparseRow& r, std::size_t cols) {
  RatVector v(cols);
  for (const auto& [c, x] : r) v[c] = x;
  return v;
}

/// result = a + s * b, zero entries dropped.
inline SparseRow sparse_axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = s * b[j].second;
      if (v != 0) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      Rational v = a[i].second + s * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i, ++j;
    }
  }
  return out;
}

/// Incremental exact elimination for large sparse linear systems.  Rows are
/// reduced against the pivots seen so far as they arrive; finalize() performs
/// the backward pass.  The result is the same unique RREF (and hence the same
/// canonical nullspace) as the dense routines in matrix.hpp — the two paths
/// are interchangeable and are cross-checked in the test suite.
class SparseRref {
 public:
  explicit SparseRref(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  void add_row(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto it = pivot_row_.find(lead);
      if (it == pivot_row_.end()) {
        const Rational inv = 1 / Rational(row.front().second);
        if (inv != 1)
          for (auto& [c, v] : row) v *= inv;
        pivot_row_[lead] = rows_.size();
        rows_.push_back(std::move(row));
        finalized_ = false;
        return;
      }
      row = sparse_axpy(row, -row.front().second, rows_[it->second]);
    }
  }

  void add_dense_row(const RatVector& v) { add_row(dense_to_sparse(v)); }

  /// RREF rows in ascending pivot-column order.
  const std::vector<SparseRow>& reduced_rows() {
    finalize();
    return rows_;
  }

  std::vector<std::size_t> pivot_columns() {
    finalize();
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& r : rows_) p.push_back(r.front().first);
    return p;
  }

  /// Canonical nullspace basis: one vector per free column, ascending.
  std::vector<RatVector> nullspace() {
    finalize();
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& r : rows_) is_pivot[r.front().first] = true;

    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      RatVector v(cols_);
      v[f] = 1;
      for (const auto& r : rows_) {
        auto it = std::lower_bound(r.begin(), r.end(), f,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != r.end() && it->first == f) v[r.front().first] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  void finalize() {
    if (finalized_) return;
    // Sort rows by pivot column, then clear above each pivot bottom-up.
    std::sort(rows_.begin(), rows_.end(),
              [](const SparseRow& a, const SparseRow& b) { return a.front().first < b.front().first; });
    for (std::size_t i = rows_.size(); i-- > 0;) {
      const std::size_t p = rows_[i].front().first;
      for (std::size_t j = 0; j < i; ++j) {
        auto& upper = rows_[j];
        auto it = std::lower_bound(upper.begin(), upper.end(), p,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
        if (it != upper.end() && it->first == p)
          upper = sparse_axpy(upper, -it->second, rows_[i]);
      }
    }
    pivot_row_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) pivot_row_[rows_[i].front().first] = i;
    finalized_ = true;
  }

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
  bool finalized_ = true;
};

}  // namespace supalg
