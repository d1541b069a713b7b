#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "supalg/graded.hpp"

namespace supalg {

/// A finite-dimensional superalgebra given by structure constants on a graded
/// basis: [e_i, e_j] = sum_k c_{ij}^k e_k.  The table is sparse, zero-free
/// and grading-admissible (the bracket is an even bilinear map).  Whether the
/// product satisfies the super Lie axioms is a property checked separately —
/// deformed products live in the same type.
struct SuperAlgebra {
  SuperVectorSpace space;
  std::string name;
  CoeffTable sc;

  std::size_t dim() const noexcept { return space.dim(); }

  Rational structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    auto it = sc.find({i, j, k});
    return it == sc.end() ? Rational(0) : it->second;
  }

  /// [e_i, e_j] as a coordinate vector.
  RatVector bracket_basis(std::size_t i, std::size_t j) const {
    RatVector out(dim());
    for (auto it = sc.lower_bound({i, j, 0});
         it != sc.end() && it->first[0] == i && it->first[1] == j; ++it)
      out[it->first[2]] = it->second;
    return out;
  }

  RatVector bracket(const RatVector& x, const RatVector& y) const {
    if (x.size() != dim() || y.size() != dim())
      throw DimensionError("bracket operands must have the algebra dimension");
    RatVector out(dim());
    for (const auto& [key, v] : sc)
      if (x[key[0]] != 0 && y[key[1]] != 0) out[key[2]] += v * x[key[0]] * y[key[1]];
    return out;
  }

  /// The bracket as a degree-0 bilinear map (shares the coefficient table).
  GradedBilinearMap bracket_tensor() const { return GradedBilinearMap{0, sc}; }

  bool operator==(const SuperAlgebra&) const = default;
};

/// Builds an algebra from (i, j, k, value) entries, validating index bounds
/// and the even grading of the bracket.  Zero values are dropped, repeated
/// keys are rejected.
inline SuperAlgebra make_super_algebra(SuperVectorSpace space, std::string name,
                                       const std::vector<std::tuple<std::size_t, std::size_t,
                                                                    std::size_t, Rational>>& entries) {
  const std::size_t n = space.dim();
  CoeffTable sc;
  for (const auto& [i, j, k, v] : entries) {
    if (i >= n || j >= n || k >= n)
      throw ValidationError("structure constant index out of range in algebra \"" + name + "\"");
    if (v == 0) continue;
    if (((space.parity(i) + space.parity(j)) & 1u) != space.parity(k))
      throw ValidationError("structure constant (" + std::to_string(i) + "," + std::to_string(j) +
                            "," + std::to_string(k) + ") violates the grading in algebra \"" +
                            name + "\"");
    if (!sc.emplace(CoeffKey{i, j, k}, v).second)
      throw ValidationError("duplicate structure constant key in algebra \"" + name + "\"");
  }
  return SuperAlgebra{std::move(space), std::move(name), std::move(sc)};
}

/// Result of a single axiom check; `witness` is the lexicographically first
/// failing basis index triple (skew failures use k = 0 slot semantics: the
/// pair (i, j) with the first offending k).
struct AxiomCheck {
  bool pass = true;
  std::optional<CoeffKey> witness;
};

/// Super-skew-symmetry: [e_i, e_j] + (-1)^{|i||j|} [e_j, e_i] = 0.
inline AxiomCheck check_super_skew(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational defect = a.structure_constant(i, j, k) +
                          parity_sign(a.space.parity(i), a.space.parity(j)) *
                              a.structure_constant(j, i, k);
        if (defect != 0) return {false, CoeffKey{i, j, k}};
      }
  return {};
}

/// Graded Jacobi identity, in the cyclic form
///   (-1)^{|i||k|}[e_i,[e_j,e_k]] + (-1)^{|j||i|}[e_j,[e_k,e_i]]
/// + (-1)^{|k||j|}[e_k,[e_i,e_j]] = 0.
inline AxiomCheck check_jacobi(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<RatVector> basis(n);
  for (std::size_t i = 0; i < n; ++i) {
    basis[i] = RatVector(n);
    basis[i][i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const unsigned pi = a.space.parity(i), pj = a.space.parity(j), pk = a.space.parity(k);
        RatVector t1 = a.bracket(basis[i], a.bracket_basis(j, k));
        RatVector t2 = a.bracket(basis[j], a.bracket_basis(k, i));
        RatVector t3 = a.bracket(basis[k], a.bracket_basis(i, j));
        bool zero = true;
        for (std::size_t m = 0; m < n && zero; ++m)
          zero = (parity_sign(pi, pk) * t1[m] + parity_sign(pj, pi) * t2[m] +
                  parity_sign(pk, pj) * t3[m]) == 0;
        if (!zero) return {false, CoeffKey{i, j, k}};
      }
  return {};
}

/// Throws MembershipError unless both super Lie axioms hold.  Solvers call
/// this so their answers are only ever produced for actual superalgebras.
inline void require_super_lie(const SuperAlgebra& a) {
  if (auto skew = check_super_skew(a); !skew.pass) {
    const auto [i, j, k] = *skew.witness;
    throw MembershipError("algebra \"" + a.name + "\" is not super-skew-symmetric at (" +
                          std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                          ")");
  }
  if (auto jac = check_jacobi(a); !jac.pass) {
    const auto [i, j, k] = *jac.witness;
    throw MembershipError("algebra \"" + a.name + "\" fails the Jacobi identity at (" +
                          std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                          ")");
  }
}

/// Left adjoint L_t = [t, -] as a linear map (split into homogeneous parts;
/// for homogeneous t one part is zero).
inline GeneralLinearMap adjoint_left(const SuperAlgebra& a, const RatVector& t) {
  const std::size_t n = a.dim();
  RatMatrix m(n, n);
  RatVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1;
    RatVector col = a.bracket(t, e);
    e[j] = 0;
    for (std::size_t r = 0; r < n; ++r) m.at(r, j) = std::move(col[r]);
  }
  return decompose_map(a.space, m);
}

/// Right adjoint R_t = [-, t].
inline GeneralLinearMap adjoint_right(const SuperAlgebra& a, const RatVector& t) {
  const std::size_t n = a.dim();
  RatMatrix m(n, n);
  RatVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1;
    RatVector col = a.bracket(e, t);
    e[j] = 0;
    for (std::size_t r = 0; r < n; ++r) m.at(r, j) = std::move(col[r]);
  }
  return decompose_map(a.space, m);
}

}  // namespace supalg
