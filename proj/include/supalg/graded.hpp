#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "supalg/errors.hpp"
#include "supalg/matrix.hpp"

namespace supalg {

/// (-1)^e.
inline int pow_sign(unsigned e) { return (e & 1u) ? -1 : 1; }

/// (-1)^{ab} for parities a, b.
inline int parity_sign(unsigned a, unsigned b) { return ((a & b & 1u) != 0) ? -1 : 1; }

/// A Z/2-graded vector space with the even block first: indices
/// 0..dim_even-1 are even, dim_even..dim()-1 are odd.
struct SuperVectorSpace {
  std::size_t dim_even = 0;
  std::size_t dim_odd = 0;
  std::vector<std::string> basis_labels;  // empty, or exactly dim() entries

  std::size_t dim() const noexcept { return dim_even + dim_odd; }
  unsigned parity(std::size_t i) const noexcept { return i < dim_even ? 0u : 1u; }

  std::string label(std::size_t i) const {
    if (i < basis_labels.size()) return basis_labels[i];
    return "e" + std::to_string(i);
  }

  bool operator==(const SuperVectorSpace&) const = default;
};

/// Parity of a vector supported on a single parity block; nullopt-free by
/// contract: throws if the vector mixes blocks or is zero.
inline unsigned homogeneous_parity(const SuperVectorSpace& s, const RatVector& v) {
  if (v.size() != s.dim()) throw DimensionError("vector length does not match space dimension");
  bool even = false, odd = false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) (s.parity(i) ? odd : even) = true;
  if (even == odd) throw ValidationError("vector is not homogeneous");
  return odd ? 1u : 0u;
}

/// A homogeneous linear map of the given degree: its matrix shifts parity by
/// `degree`, i.e. entry (r, c) may be nonzero only when
/// parity(r) == parity(c) + degree (mod 2).
struct GradedLinearMap {
  unsigned degree = 0;
  RatMatrix matrix;

  static GradedLinearMap zero(const SuperVectorSpace& s, unsigned degree) {
    return GradedLinearMap{degree & 1u, RatMatrix(s.dim(), s.dim())};
  }

  /// Validating factory: rejects matrices with entries off the parity block
  /// pattern of the requested degree.
  static GradedLinearMap checked(const SuperVectorSpace& s, unsigned degree, RatMatrix m) {
    degree &= 1u;
    if (m.rows() != s.dim() || m.cols() != s.dim())
      throw DimensionError("graded map matrix must be square of the space dimension");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m.at(r, c) != 0 && ((s.parity(r) ^ s.parity(c)) != degree))
          throw ValidationError("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") violates the degree-" + std::to_string(degree) +
                                " block pattern");
    return GradedLinearMap{degree, std::move(m)};
  }

  RatVector apply(const RatVector& v) const { return matrix.apply(v); }

  bool operator==(const GradedLinearMap& o) const {
    return degree == o.degree && matrix == o.matrix;
  }
};

/// Supercommutator of homogeneous maps: f g - (-1)^{|f||g|} g f, of degree
/// |f| + |g| (mod 2).
inline GradedLinearMap supercommutator(const GradedLinearMap& f, const GradedLinearMap& g) {
  RatMatrix fg = f.matrix * g.matrix;
  RatMatrix gf = g.matrix * f.matrix;
  RatMatrix m = (parity_sign(f.degree, g.degree) == 1) ? fg - gf : fg + gf;
  return GradedLinearMap{(f.degree + g.degree) & 1u, std::move(m)};
}

/// An arbitrary linear map split into its homogeneous parts.  The split is
/// unique: entries on the diagonal blocks form the even part, entries on the
/// off-diagonal blocks the odd part.
struct GeneralLinearMap {
  GradedLinearMap even_part;  // degree 0
  GradedLinearMap odd_part;   // degree 1

  RatMatrix total() const { return even_part.matrix + odd_part.matrix; }
  RatVector apply(const RatVector& v) const { return total().apply(v); }

  bool operator==(const GeneralLinearMap&) const = default;
};

inline GeneralLinearMap decompose_map(const SuperVectorSpace& s, const RatMatrix& f) {
  if (f.rows() != s.dim() || f.cols() != s.dim())
    throw DimensionError("decompose_map: matrix must be square of the space dimension");
  GeneralLinearMap out{GradedLinearMap::zero(s, 0), GradedLinearMap::zero(s, 1)};
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      if (f.at(r, c) == 0) continue;
      ((s.parity(r) == s.parity(c)) ? out.even_part : out.odd_part).matrix.at(r, c) = f.at(r, c);
    }
  return out;
}

/// Index triple (i, j, k) for the coefficient of e_k in B(e_i, e_j).
using CoeffKey = std::array<std::size_t, 3>;
using CoeffTable = std::map<CoeffKey, Rational>;

/// A homogeneous bilinear map of the given degree, stored sparsely:
/// B(e_i, e_j) = sum_k coeffs[{i,j,k}] e_k.  Entries are nonzero and
/// parity-admissible: parity(k) == parity(i) + parity(j) + degree (mod 2).
struct GradedBilinearMap {
  unsigned degree = 0;
  CoeffTable coeffs;

  Rational coeff(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = coeffs.find({i, j, k});
    return it == coeffs.end() ? Rational(0) : it->second;
  }

  /// B(e_i, y) as a coordinate vector of length n.
  RatVector eval_basis_left(std::size_t i, const RatVector& y) const {
    RatVector out(y.size());
    for (auto it = coeffs.lower_bound({i, 0, 0}); it != coeffs.end() && it->first[0] == i; ++it)
      if (y[it->first[1]] != 0) out[it->first[2]] += it->second * y[it->first[1]];
    return out;
  }

  RatVector eval(const RatVector& x, const RatVector& y) const {
    RatVector out(x.size());
    for (const auto& [key, v] : coeffs)
      if (x[key[0]] != 0 && y[key[1]] != 0) out[key[2]] += v * x[key[0]] * y[key[1]];
    return out;
  }

  bool operator==(const GradedBilinearMap&) const = default;
};

/// Validating factory for bilinear coefficient tables.
inline GradedBilinearMap checked_bilinear(const SuperVectorSpace& s, unsigned degree,
                                          CoeffTable coeffs) {
  degree &= 1u;
  const std::size_t n = s.dim();
  for (const auto& [key, v] : coeffs) {
    const auto [i, j, k] = key;
    if (i >= n || j >= n || k >= n)
      throw ValidationError("bilinear coefficient index out of range");
    if (v == 0) throw ValidationError("bilinear coefficient table stores an explicit zero");
    if (((s.parity(i) + s.parity(j) + degree) & 1u) != s.parity(k))
      throw ValidationError("bilinear coefficient (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) +
                            ") violates the degree-" + std::to_string(degree) + " grading");
  }
  return GradedBilinearMap{degree, std::move(coeffs)};
}

/// First (i, j) in lex order with B(e_i, e_j) != -(-1)^{|i||j|} B(e_j, e_i),
/// i.e. a failure of super-skew-symmetry; nullopt when B is super-skew.
inline std::optional<std::array<std::size_t, 2>> first_skew_violation(
    const SuperVectorSpace& s, const GradedBilinearMap& b) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs = b.coeff(i, j, k) + parity_sign(s.parity(i), s.parity(j)) * b.coeff(j, i, k);
        if (lhs != 0) return std::array<std::size_t, 2>{i, j};
      }
  return std::nullopt;
}

}  // namespace supalg
