#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "supalg/errors.hpp"
#include "supalg/rational.hpp"

namespace supalg {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  RatMatrix operator+(const RatMatrix& o) const {
    require_same_shape(o);
    RatMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }

  RatMatrix operator-(const RatMatrix& o) const {
    require_same_shape(o);
    RatMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_)
      throw DimensionError("matrix product shape mismatch: " + shape_str() + " * " + o.shape_str());
    RatMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rational& w = o.at(k, j);
          if (w != 0) r.at(i, j) += v * w;
        }
      }
    return r;
  }

  RatMatrix scaled(const Rational& s) const {
    RatMatrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  RatMatrix transposed() const {
    RatMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  RatVector apply(const RatVector& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
  }

  RatVector row(std::size_t r) const {
    return RatVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  RatVector column(std::size_t c) const {
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, c);
    return out;
  }

 private:
  void require_same_shape(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError("matrix shape mismatch: " + shape_str() + " vs " + o.shape_str());
  }
  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  RatMatrix matrix;
  std::vector<std::size_t> pivot_cols;  // ascending
  std::size_t rank = 0;
};

/// Reduced row echelon form via exact Gauss-Jordan elimination.  Pivots are
/// chosen as the first nonzero entry in each column scan, so the result is
/// the unique RREF of the row space.
inline RrefResult rref(RatMatrix m) {
  RrefResult out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(pivot_row, j));
    const Rational inv = 1 / Rational(m.at(pivot_row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      const Rational f = m.at(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(pivot_row, j);
    }
    out.pivot_cols.push_back(col);
    ++pivot_row;
  }
  out.rank = out.pivot_cols.size();
  out.matrix = std::move(m);
  return out;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

/// Canonical nullspace basis read off the RREF: one vector per free column,
/// ordered by ascending free column, with entry 1 at that free column and
/// the pivot rows' negated entries elsewhere.
inline std::vector<RatVector> nullspace(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_cols) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.matrix.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One particular solution of a x = b (free variables set to 0), or nullopt
/// when the system is inconsistent.
inline std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: rhs length does not match row count");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(std::move(aug));
  RatVector x(a.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[r.pivot_cols[i]] = r.matrix.at(i, a.cols());
  }
  return x;
}

/// Stacks vectors as the rows of a matrix (all must share one length).
inline RatMatrix stack_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("stack_rows: ragged input");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

/// True when v lies in the row space spanned by `rows`.
inline bool in_span(const std::vector<RatVector>& rows, const RatVector& v) {
  if (rows.empty()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  RatMatrix a = stack_rows(rows, v.size());
  const std::size_t r0 = rank(a);
  std::vector<RatVector> with = rows;
  with.push_back(v);
  return rank(stack_rows(with, v.size())) == r0;
}

/// True when two families of vectors span the same subspace.
inline bool same_span(const std::vector<RatVector>& a, const std::vector<RatVector>& b,
                      std::size_t ambient) {
  RatMatrix ma = stack_rows(a, ambient);
  RatMatrix mb = stack_rows(b, ambient);
  const std::size_t ra = rank(ma), rb = rank(mb);
  if (ra != rb) return false;
  std::vector<RatVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(stack_rows(both, ambient)) == ra;
}

}  // namespace supalg
