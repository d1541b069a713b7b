#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supalg/sparse_rref.hpp"
#include "supalg/superalgebra.hpp"

namespace supalg {

/// Which defining equations a solution space solves.
enum class ConstraintTag {
  Type1,                 // super-derivations
  Type2,                 // the companion equation with the sign on the left slot
  InnerType1,            // span of left adjoints
  InnerType2,            // span of right adjoints
  BiderNew,              // bi-maps: rows type-1, columns type-2
  BiderYuanTang,         // bi-maps under the alternative sign convention
  SupercommutingNew,     // [f(x), y] = [x, f(y)]
  SupercommutingFanDai,  // [f(x), x] = 0 (polarized)
  Center,
};

inline const char* tag_name(ConstraintTag t) {
  switch (t) {
    case ConstraintTag::Type1: return "type1";
    case ConstraintTag::Type2: return "type2";
    case ConstraintTag::InnerType1: return "inner_type1";
    case ConstraintTag::InnerType2: return "inner_type2";
    case ConstraintTag::BiderNew: return "bider_new";
    case ConstraintTag::BiderYuanTang: return "bider_yuan_tang";
    case ConstraintTag::SupercommutingNew: return "supercomm_new";
    case ConstraintTag::SupercommutingFanDai: return "supercomm_fan_dai";
    case ConstraintTag::Center: return "center";
  }
  return "?";
}

/// A solved space of linear maps.  `basis` holds full matrices in canonical
/// RREF-nullspace order; for homogeneous tags every basis matrix respects the
/// block pattern of `degree`.  `unknown_count` and `rank` describe the
/// assembled system (for spanned spaces such as the inner derivations they
/// are the candidate count and the span dimension).
struct LinearSolutionSpace {
  ConstraintTag tag{};
  std::optional<unsigned> degree;
  std::string algebra_name;
  std::size_t unknown_count = 0;
  std::size_t rank = 0;
  std::vector<RatMatrix> basis;

  std::size_t dimension() const noexcept { return basis.size(); }

  GradedLinearMap graded_member(std::size_t idx) const {
    if (!degree) throw ValidationError("solution space has no single degree");
    return GradedLinearMap{*degree, basis.at(idx)};
  }
};

/// A linear system over the parity-admissible matrix entries of one degree.
struct LinearConstraintSystem {
  std::vector<std::array<std::size_t, 2>> unknowns;  // (row, col), lex order
  std::vector<SparseRow> rows;                       // assembly order

  std::size_t unknown_count() const noexcept { return unknowns.size(); }

  RatMatrix to_dense() const {
    RatMatrix m(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) m.at(r, c) = v;
    return m;
  }
};

namespace detail {

// Admissible matrix entries (r, c) with parity(r) + parity(c) = degree, lex
// ordered, plus an O(1) reverse lookup (-1 marks forbidden entries).
struct EntryIndex {
  std::vector<std::array<std::size_t, 2>> entries;
  std::vector<long> id;  // n*n, -1 when not admissible
  std::size_t n = 0;

  EntryIndex(const SuperVectorSpace& s, unsigned degree) : n(s.dim()) {
    id.assign(n * n, -1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((s.parity(r) ^ s.parity(c)) == (degree & 1u)) {
          id[r * n + c] = static_cast<long>(entries.size());
          entries.push_back({r, c});
        }
  }

  long lookup(std::size_t r, std::size_t c) const { return id[r * n + c]; }
};

// Structure constants regrouped for fast access by one fixed slot:
//   left_of[j]  = all (l, m, v) with c_{l j}^m = v
//   right_of[i] = all (l, m, v) with c_{i l}^m = v
struct ScIndex {
  std::vector<std::vector<std::array<std::size_t, 2>>> pos_left, pos_right;
  std::vector<std::vector<Rational>> val_left, val_right;

  explicit ScIndex(const SuperAlgebra& a) {
    const std::size_t n = a.dim();
    pos_left.resize(n);
    pos_right.resize(n);
    val_left.resize(n);
    val_right.resize(n);
    for (const auto& [key, v] : a.sc) {
      const auto [i, j, m] = key;
      pos_left[j].push_back({i, m});
      val_left[j].push_back(v);
      pos_right[i].push_back({j, m});
      val_right[i].push_back(v);
    }
  }
};

// Rows of one basis pair (i, j), indexed by output coordinate m; emitted in
// ascending m with zero coefficients dropped.
using RowGroup = std::map<std::size_t, std::map<std::size_t, Rational>>;

inline void emit_rows(RowGroup& group, std::vector<SparseRow>& out) {
  for (auto& [m, row] : group) {
    SparseRow r;
    r.reserve(row.size());
    for (auto& [c, v] : row)
      if (v != 0) r.emplace_back(c, std::move(v));
    if (!r.empty()) out.push_back(std::move(r));
  }
  group.clear();
}

}  // namespace detail

/// Assembles the linear system for the degree-`d` solutions of
///   D[x,y] = [Dx, y] + (-1)^{d |x|} [x, Dy]          (type 1)
///   D[x,y] = (-1)^{d |y|} [Dx, y] + [x, Dy]          (type 2)
/// over the admissible matrix entries, with rows ordered by (i, j, m).
inline LinearConstraintSystem assemble_type_constraints(const SuperAlgebra& a, unsigned degree,
                                                        bool type2) {
  const std::size_t n = a.dim();
  const unsigned d = degree & 1u;
  const detail::EntryIndex index(a.space, d);
  const detail::ScIndex sc(a);

  LinearConstraintSystem sys;
  sys.unknowns = index.entries;

  detail::RowGroup group;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int s_left = type2 ? pow_sign(d * a.space.parity(j)) : 1;
      const int s_right = type2 ? 1 : pow_sign(d * a.space.parity(i));

      // D applied to [e_i, e_j]: + c_{ij}^k at entry (m, k).
      for (auto it = a.sc.lower_bound({i, j, 0});
           it != a.sc.end() && it->first[0] == i && it->first[1] == j; ++it) {
        const std::size_t k = it->first[2];
        const unsigned pm = (a.space.parity(k) ^ d);
        const std::size_t lo = pm ? a.space.dim_even : 0;
        const std::size_t hi = pm ? n : a.space.dim_even;
        for (std::size_t m = lo; m < hi; ++m)
          group[m][static_cast<std::size_t>(index.lookup(m, k))] += it->second;
      }
      // -s_left [D e_i, e_j]: entries (l, i) against c_{l j}^m.
      for (std::size_t t = 0; t < sc.pos_left[j].size(); ++t) {
        const auto [l, m] = sc.pos_left[j][t];
        const long u = index.lookup(l, i);
        if (u >= 0) group[m][static_cast<std::size_t>(u)] -= s_left * sc.val_left[j][t];
      }
      // -s_right [e_i, D e_j]: entries (l, j) against c_{i l}^m.
      for (std::size_t t = 0; t < sc.pos_right[i].size(); ++t) {
        const auto [l, m] = sc.pos_right[i][t];
        const long u = index.lookup(l, j);
        if (u >= 0) group[m][static_cast<std::size_t>(u)] -= s_right * sc.val_right[i][t];
      }
      detail::emit_rows(group, sys.rows);
    }
  return sys;
}

namespace detail {

inline LinearSolutionSpace solve_entry_system(const SuperAlgebra& a, ConstraintTag tag,
                                              unsigned degree, const LinearConstraintSystem& sys) {
  SparseRref elim(sys.unknown_count());
  for (const auto& r : sys.rows) elim.add_row(r);
  const std::vector<RatVector> null_basis = elim.nullspace();

  LinearSolutionSpace out;
  out.tag = tag;
  out.degree = degree & 1u;
  out.algebra_name = a.name;
  out.unknown_count = sys.unknown_count();
  out.rank = elim.rank();
  out.basis.reserve(null_basis.size());
  const std::size_t n = a.dim();
  for (const auto& v : null_basis) {
    RatMatrix m(n, n);
    for (std::size_t u = 0; u < v.size(); ++u)
      if (v[u] != 0) m.at(sys.unknowns[u][0], sys.unknowns[u][1]) = v[u];
    out.basis.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// All degree-`d` solutions of the type-1 (super-derivation) equation.
inline LinearSolutionSpace solve_type1(const SuperAlgebra& a, unsigned degree) {
  require_super_lie(a);
  return detail::solve_entry_system(a, ConstraintTag::Type1, degree,
                                    assemble_type_constraints(a, degree, /*type2=*/false));
}

/// All degree-`d` solutions of the type-2 equation.
inline LinearSolutionSpace solve_type2(const SuperAlgebra& a, unsigned degree) {
  require_super_lie(a);
  return detail::solve_entry_system(a, ConstraintTag::Type2, degree,
                                    assemble_type_constraints(a, degree, /*type2=*/true));
}

/// Canonical basis of the (super)center { t : [t, x] = 0 for all x }.
inline std::vector<RatVector> center(const SuperAlgebra& a) {
  require_super_lie(a);
  const std::size_t n = a.dim();
  RatMatrix sys(n * n, n);
  for (const auto& [key, v] : a.sc) {
    const auto [i, j, m] = key;
    sys.at(j * n + m, i) = v;
  }
  return nullspace(sys);
}

namespace detail {

inline LinearSolutionSpace span_space(const SuperAlgebra& a, ConstraintTag tag, unsigned degree,
                                      const std::vector<RatMatrix>& candidates) {
  const std::size_t n = a.dim();
  SparseRref elim(n * n);
  for (const auto& m : candidates) {
    SparseRow row;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m.at(r, c) != 0) row.emplace_back(r * n + c, m.at(r, c));
    elim.add_row(std::move(row));
  }
  LinearSolutionSpace out;
  out.tag = tag;
  out.degree = degree & 1u;
  out.algebra_name = a.name;
  out.unknown_count = candidates.size();
  out.rank = elim.rank();
  for (const auto& row : elim.reduced_rows()) {
    RatMatrix m(n, n);
    for (const auto& [pos, v] : row) m.at(pos / n, pos % n) = v;
    out.basis.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

/// Span of the left adjoints of the degree-`d` basis vectors (canonical RREF
/// row basis of the span).
inline LinearSolutionSpace inner_derivations(const SuperAlgebra& a, unsigned degree) {
  require_super_lie(a);
  const unsigned d = degree & 1u;
  std::vector<RatMatrix> cands;
  RatVector e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.space.parity(i) != d) continue;
    e[i] = 1;
    cands.push_back((d == 0 ? adjoint_left(a, e).even_part : adjoint_left(a, e).odd_part).matrix);
    e[i] = 0;
  }
  return detail::span_space(a, ConstraintTag::InnerType1, d, cands);
}

/// Span of the right adjoints of the degree-`d` basis vectors.
inline LinearSolutionSpace inner_type2(const SuperAlgebra& a, unsigned degree) {
  require_super_lie(a);
  const unsigned d = degree & 1u;
  std::vector<RatMatrix> cands;
  RatVector e(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.space.parity(i) != d) continue;
    e[i] = 1;
    cands.push_back((d == 0 ? adjoint_right(a, e).even_part : adjoint_right(a, e).odd_part).matrix);
    e[i] = 0;
  }
  return detail::span_space(a, ConstraintTag::InnerType2, d, cands);
}

/// Certificate that an algebra is complete: trivial center and every
/// super-derivation inner, recorded per degree.  The zero algebra is
/// complete vacuously.
struct CompletenessCertificate {
  std::size_t center_dim = 0;
  std::array<std::size_t, 2> derivation_dims{};
  std::array<std::size_t, 2> inner_dims{};
  bool complete = false;
  bool vacuous = false;
};

inline CompletenessCertificate is_complete(const SuperAlgebra& a) {
  require_super_lie(a);
  CompletenessCertificate cert;
  if (a.dim() == 0) {
    cert.complete = cert.vacuous = true;
    return cert;
  }
  cert.center_dim = center(a).size();
  for (unsigned d = 0; d < 2; ++d) {
    cert.derivation_dims[d] = solve_type1(a, d).dimension();
    cert.inner_dims[d] = inner_derivations(a, d).dimension();
  }
  cert.complete = cert.center_dim == 0 && cert.derivation_dims == cert.inner_dims;
  return cert;
}

/// First basis pair (i, j) violating the type-1 equation for D, or nullopt.
inline std::optional<std::array<std::size_t, 2>> first_type1_violation(const SuperAlgebra& a,
                                                                       const GradedLinearMap& D) {
  const std::size_t n = a.dim();
  if (D.matrix.rows() != n) throw DimensionError("map does not match the algebra dimension");
  RatVector ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i) {
    ei[i] = 1;
    const RatVector Dei = D.apply(ei);
    const int s = pow_sign(D.degree * a.space.parity(i));
    for (std::size_t j = 0; j < n; ++j) {
      ej[j] = 1;
      RatVector lhs = D.apply(a.bracket_basis(i, j));
      RatVector r1 = a.bracket(Dei, ej);
      RatVector r2 = a.bracket(ei, D.apply(ej));
      ej[j] = 0;
      for (std::size_t m = 0; m < n; ++m)
        if (lhs[m] - r1[m] - s * r2[m] != 0) {
          ei[i] = 0;
          return std::array<std::size_t, 2>{i, j};
        }
    }
    ei[i] = 0;
  }
  return std::nullopt;
}

/// First basis pair (i, j) violating the type-2 equation for D, or nullopt.
inline std::optional<std::array<std::size_t, 2>> first_type2_violation(const SuperAlgebra& a,
                                                                       const GradedLinearMap& D) {
  const std::size_t n = a.dim();
  if (D.matrix.rows() != n) throw DimensionError("map does not match the algebra dimension");
  RatVector ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i) {
    ei[i] = 1;
    const RatVector Dei = D.apply(ei);
    for (std::size_t j = 0; j < n; ++j) {
      ej[j] = 1;
      const int s = pow_sign(D.degree * a.space.parity(j));
      RatVector lhs = D.apply(a.bracket_basis(i, j));
      RatVector r1 = a.bracket(Dei, ej);
      RatVector r2 = a.bracket(ei, D.apply(ej));
      ej[j] = 0;
      for (std::size_t m = 0; m < n; ++m)
        if (lhs[m] - s * r1[m] - r2[m] != 0) {
          ei[i] = 0;
          return std::array<std::size_t, 2>{i, j};
        }
    }
    ei[i] = 0;
  }
  return std::nullopt;
}

namespace detail {

// Scale column c by (-1)^{d * parity(c)}: conjugation by the parity
// involution on the source slot.
inline RatMatrix twist_columns(const SuperVectorSpace& s, unsigned d, const RatMatrix& m) {
  RatMatrix out = m;
  if (d & 1u)
    for (std::size_t c = s.dim_even; c < s.dim(); ++c)
      for (std::size_t r = 0; r < s.dim(); ++r)
        if (out.at(r, c) != 0) out.at(r, c) = -out.at(r, c);
  return out;
}

}  // namespace detail

/// Degree-preserving isomorphism from type-1 solutions to type-2 solutions:
/// (f D)(x) = (-1)^{|D||x|} D(x).  Rejects inputs that are not type-1.
inline GradedLinearMap transform_f(const SuperAlgebra& a, const GradedLinearMap& D) {
  if (auto w = first_type1_violation(a, D))
    throw MembershipError("transform_f input fails the type-1 equation at basis pair (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + ")");
  GradedLinearMap out{D.degree, detail::twist_columns(a.space, D.degree, D.matrix)};
  if (first_type2_violation(a, out))
    throw InternalError("transform_f produced a non-type-2 map");
  return out;
}

/// Inverse of transform_f (the same column twist).  Rejects non-type-2 input.
inline GradedLinearMap transform_g(const SuperAlgebra& a, const GradedLinearMap& D) {
  if (auto w = first_type2_violation(a, D))
    throw MembershipError("transform_g input fails the type-2 equation at basis pair (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + ")");
  GradedLinearMap out{D.degree, detail::twist_columns(a.space, D.degree, D.matrix)};
  if (first_type1_violation(a, out))
    throw InternalError("transform_g produced a non-type-1 map");
  return out;
}

/// Checks f([D1, D2]) = (-1)^{|D1||D2|} [f(D1), f(D2)] for type-1 maps
/// D1, D2 (both sides are then type-2 of degree |D1|+|D2|).
struct TwistIdentityCheck {
  bool pass = false;
  int sign = 1;
};

inline TwistIdentityCheck check_twist_identity(const SuperAlgebra& a, const GradedLinearMap& d1,
                                               const GradedLinearMap& d2) {
  const GradedLinearMap lhs = transform_f(a, supercommutator(d1, d2));
  const GradedLinearMap f1 = transform_f(a, d1);
  const GradedLinearMap f2 = transform_f(a, d2);
  const int sign = parity_sign(d1.degree, d2.degree);
  const GradedLinearMap rhs_raw = supercommutator(f1, f2);
  return {lhs.matrix == rhs_raw.matrix.scaled(sign), sign};
}

/// Finds homogeneous t of parity |D| with [-, t] = D, when one exists.  The
/// returned vector is full-length with zeros off the parity block.
inline std::optional<RatVector> express_as_adjoint_right(const SuperAlgebra& a,
                                                         const GradedLinearMap& D) {
  const std::size_t n = a.dim();
  const unsigned d = D.degree;
  std::vector<std::size_t> block;
  for (std::size_t i = 0; i < n; ++i)
    if (a.space.parity(i) == d) block.push_back(i);

  RatMatrix sys(n * n, block.size());
  RatVector rhs(n * n);
  for (std::size_t bi = 0; bi < block.size(); ++bi)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m)
        sys.at(j * n + m, bi) = a.structure_constant(j, block[bi], m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t m = 0; m < n; ++m) rhs[j * n + m] = D.matrix.at(m, j);

  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  RatVector t(n);
  for (std::size_t bi = 0; bi < block.size(); ++bi) t[block[bi]] = (*x)[bi];
  return t;
}

}  // namespace supalg
