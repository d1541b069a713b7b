#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "supalg/operator_spaces.hpp"

namespace supalg {

/// The two competing sign conventions for the second defining equation of a
/// superbiderivation.  They agree on degree-0 maps but differ in general.
enum class BiderVariant { New, YuanTang };

inline const char* variant_name(BiderVariant v) {
  return v == BiderVariant::New ? "new" : "yuan_tang";
}

/// A linear system over the admissible coefficient triples (i, j, k) of a
/// degree-`d` bilinear map.
struct BilinearConstraintSystem {
  std::vector<CoeffKey> unknowns;  // lex order
  std::vector<SparseRow> rows;     // (equation, a, b, c, m) order

  std::size_t unknown_count() const noexcept { return unknowns.size(); }

  RatMatrix to_dense() const {
    RatMatrix m(rows.size(), unknowns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (const auto& [c, v] : rows[r]) m.at(r, c) = v;
    return m;
  }
};

struct BilinearSolutionSpace {
  ConstraintTag tag{};
  unsigned degree = 0;
  std::string algebra_name;
  std::size_t unknown_count = 0;
  std::size_t rank = 0;
  std::vector<GradedBilinearMap> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
};

namespace detail {

// Admissible coefficient triples for degree d, lex ordered, with O(1)
// reverse lookup.
struct TripleIndex {
  std::vector<CoeffKey> triples;
  std::vector<long> id;  // n^3 flat, -1 when inadmissible
  std::size_t n = 0;

  TripleIndex(const SuperVectorSpace& s, unsigned d) : n(s.dim()) {
    id.assign(n * n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (((s.parity(i) + s.parity(j) + d) & 1u) == s.parity(k)) {
            id[(i * n + j) * n + k] = static_cast<long>(triples.size());
            triples.push_back({i, j, k});
          }
  }

  long lookup(std::size_t i, std::size_t j, std::size_t k) const {
    return id[(i * n + j) * n + k];
  }
};

}  // namespace detail

/// Assembles the full constraint system for degree-`d` superbiderivations:
/// for every basis triple (a, b, c),
///   eq 1:  B(e_a, [e_b, e_c]) = [B(e_a, e_b), e_c]
///                             + (-1)^{(d+|a|)|b|} [e_b, B(e_a, e_c)]
///   eq 2 (New):        B([e_a, e_b], e_c) = (-1)^{(d+|c|)|b|} [B(e_a, e_c), e_b]
///                                         + [e_a, B(e_b, e_c)]
///   eq 2 (Yuan-Tang):  B([e_a, e_b], e_c) = (-1)^{|b||c|} [B(e_a, e_c), e_b]
///                                         + (-1)^{|a| d} [e_a, B(e_b, e_c)]
/// Rows are ordered lexicographically by (equation, a, b, c, m) with zero
/// rows dropped.
inline BilinearConstraintSystem assemble_bider_constraints(const SuperAlgebra& alg,
                                                           unsigned degree, BiderVariant variant) {
  const std::size_t n = alg.dim();
  const unsigned d = degree & 1u;
  const detail::TripleIndex index(alg.space, d);
  const detail::ScIndex sc(alg);
  auto parity = [&](std::size_t i) { return alg.space.parity(i); };

  BilinearConstraintSystem sys;
  sys.unknowns = index.triples;

  detail::RowGroup group;
  auto block_range = [&](unsigned q) {
    return std::pair<std::size_t, std::size_t>(q ? alg.space.dim_even : 0,
                                               q ? n : alg.space.dim_even);
  };

  for (unsigned eq = 1; eq <= 2; ++eq)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          const unsigned q = (parity(a) + parity(b) + parity(c) + d) & 1u;
          const auto [mlo, mhi] = block_range(q);
          if (eq == 1) {
            // + B(e_a, [e_b, e_c])
            for (auto it = alg.sc.lower_bound({b, c, 0});
                 it != alg.sc.end() && it->first[0] == b && it->first[1] == c; ++it) {
              const std::size_t k = it->first[2];
              for (std::size_t m = mlo; m < mhi; ++m)
                group[m][static_cast<std::size_t>(index.lookup(a, k, m))] += it->second;
            }
            // - [B(e_a, e_b), e_c]
            for (std::size_t t = 0; t < sc.pos_left[c].size(); ++t) {
              const auto [l, m] = sc.pos_left[c][t];
              const long u = index.lookup(a, b, l);
              if (u >= 0) group[m][static_cast<std::size_t>(u)] -= sc.val_left[c][t];
            }
            // - (-1)^{(d+|a|)|b|} [e_b, B(e_a, e_c)]
            const int s = pow_sign((d + parity(a)) * parity(b));
            for (std::size_t t = 0; t < sc.pos_right[b].size(); ++t) {
              const auto [l, m] = sc.pos_right[b][t];
              const long u = index.lookup(a, c, l);
              if (u >= 0) group[m][static_cast<std::size_t>(u)] -= s * sc.val_right[b][t];
            }
          } else {
            // + B([e_a, e_b], e_c)
            for (auto it = alg.sc.lower_bound({a, b, 0});
                 it != alg.sc.end() && it->first[0] == a && it->first[1] == b; ++it) {
              const std::size_t k = it->first[2];
              for (std::size_t m = mlo; m < mhi; ++m)
                group[m][static_cast<std::size_t>(index.lookup(k, c, m))] += it->second;
            }
            // - s1 [B(e_a, e_c), e_b]
            const int s1 = (variant == BiderVariant::New)
                               ? pow_sign((d + parity(c)) * parity(b))
                               : parity_sign(parity(b), parity(c));
            for (std::size_t t = 0; t < sc.pos_left[b].size(); ++t) {
              const auto [l, m] = sc.pos_left[b][t];
              const long u = index.lookup(a, c, l);
              if (u >= 0) group[m][static_cast<std::size_t>(u)] -= s1 * sc.val_left[b][t];
            }
            // - s2 [e_a, B(e_b, e_c)]
            const int s2 = (variant == BiderVariant::New) ? 1 : pow_sign(parity(a) * d);
            for (std::size_t t = 0; t < sc.pos_right[a].size(); ++t) {
              const auto [l, m] = sc.pos_right[a][t];
              const long u = index.lookup(b, c, l);
              if (u >= 0) group[m][static_cast<std::size_t>(u)] -= s2 * sc.val_right[a][t];
            }
          }
          detail::emit_rows(group, sys.rows);
        }
  return sys;
}

/// Solves for all degree-`d` superbiderivations under the chosen convention.
inline BilinearSolutionSpace solve_biderivations(const SuperAlgebra& alg, unsigned degree,
                                                 BiderVariant variant) {
  require_super_lie(alg);
  const BilinearConstraintSystem sys = assemble_bider_constraints(alg, degree, variant);
  SparseRref elim(sys.unknown_count());
  for (const auto& r : sys.rows) elim.add_row(r);

  BilinearSolutionSpace out;
  out.tag = variant == BiderVariant::New ? ConstraintTag::BiderNew : ConstraintTag::BiderYuanTang;
  out.degree = degree & 1u;
  out.algebra_name = alg.name;
  out.unknown_count = sys.unknown_count();
  out.rank = elim.rank();
  for (const auto& v : elim.nullspace()) {
    CoeffTable coeffs;
    for (std::size_t u = 0; u < v.size(); ++u)
      if (v[u] != 0) coeffs.emplace(sys.unknowns[u], v[u]);
    out.basis.push_back(GradedBilinearMap{degree & 1u, std::move(coeffs)});
  }
  return out;
}

/// Independent pointwise checker: evaluates both defining equations on every
/// basis triple and reports the lexicographically first failing (a, b, c).
inline std::optional<CoeffKey> first_bider_violation(const SuperAlgebra& alg,
                                                     const GradedBilinearMap& B,
                                                     BiderVariant variant) {
  const std::size_t n = alg.dim();
  const unsigned d = B.degree;
  auto parity = [&](std::size_t i) { return alg.space.parity(i); };
  RatVector ea(n), eb(n), ec(n);
  for (std::size_t a = 0; a < n; ++a) {
    ea[a] = 1;
    for (std::size_t b = 0; b < n; ++b) {
      eb[b] = 1;
      for (std::size_t c = 0; c < n; ++c) {
        ec[c] = 1;
        bool ok = true;
        {
          RatVector lhs = B.eval_basis_left(a, alg.bracket_basis(b, c));
          RatVector r1 = alg.bracket(B.eval_basis_left(a, eb), ec);
          RatVector r2 = alg.bracket(eb, B.eval_basis_left(a, ec));
          const int s = pow_sign((d + parity(a)) * parity(b));
          for (std::size_t m = 0; m < n && ok; ++m) ok = (lhs[m] - r1[m] - s * r2[m]) == 0;
        }
        if (ok) {
          RatVector lhs = B.eval(alg.bracket_basis(a, b), ec);
          RatVector r1 = alg.bracket(B.eval_basis_left(a, ec), eb);
          RatVector r2 = alg.bracket(ea, B.eval_basis_left(b, ec));
          const int s1 = (variant == BiderVariant::New) ? pow_sign((d + parity(c)) * parity(b))
                                                        : parity_sign(parity(b), parity(c));
          const int s2 = (variant == BiderVariant::New) ? 1 : pow_sign(parity(a) * d);
          for (std::size_t m = 0; m < n && ok; ++m) ok = (lhs[m] - s1 * r1[m] - s2 * r2[m]) == 0;
        }
        ec[c] = 0;
        if (!ok) {
          ea[a] = 0;
          eb[b] = 0;
          return CoeffKey{a, b, c};
        }
      }
      eb[b] = 0;
    }
    ea[a] = 0;
  }
  return std::nullopt;
}

/// On a complete algebra, every superbiderivation (new convention) acts as
/// B(x, y) = [phi(x), y] = [x, psi(y)] for unique homogeneous maps phi, psi
/// of degree |B|.  Solves for them column by column and re-verifies both
/// identities; any failure is an internal inconsistency.
struct PhiPsiPair {
  GradedLinearMap phi;
  GradedLinearMap psi;
};

inline PhiPsiPair extract_phi_psi(const SuperAlgebra& alg, const GradedBilinearMap& B) {
  if (!is_complete(alg).complete)
    throw MembershipError("phi/psi extraction requires a complete algebra, and \"" + alg.name +
                          "\" is not complete");
  if (auto w = first_bider_violation(alg, B, BiderVariant::New))
    throw MembershipError("map is not a superbiderivation (new convention); first failure at (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
                          std::to_string((*w)[2]) + ")");

  const std::size_t n = alg.dim();
  RatMatrix left(n * n, n), right(n * n, n);
  for (const auto& [key, v] : alg.sc) {
    const auto [i, j, m] = key;
    left.at(j * n + m, i) = v;   // [u, e_j]_m = sum_l u_l c_{l j}^m
    right.at(i * n + m, j) = v;  // [e_i, u]_m = sum_l u_l c_{i l}^m
  }

  RatMatrix phi(n, n), psi(n, n);
  RatVector ei(n);
  for (std::size_t i = 0; i < n; ++i) {
    ei[i] = 1;
    RatVector rhs_phi(n * n), rhs_psi(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      RatVector bij = B.eval_basis_left(i, [&] {
        RatVector e(n);
        e[j] = 1;
        return e;
      }());
      RatVector bji = B.eval_basis_left(j, ei);
      for (std::size_t m = 0; m < n; ++m) {
        rhs_phi[j * n + m] = std::move(bij[m]);
        rhs_psi[j * n + m] = std::move(bji[m]);
      }
    }
    ei[i] = 0;

    auto u = solve(left, rhs_phi);
    if (!u) throw InternalError("no left-acting vector exists for column " + std::to_string(i));
    auto v = solve(right, rhs_psi);
    if (!v) throw InternalError("no right-acting vector exists for column " + std::to_string(i));
    for (std::size_t r = 0; r < n; ++r) {
      phi.at(r, i) = std::move((*u)[r]);
      psi.at(r, i) = std::move((*v)[r]);
    }
  }

  PhiPsiPair out{GradedLinearMap::checked(alg.space, B.degree, std::move(phi)),
                 GradedLinearMap::checked(alg.space, B.degree, std::move(psi))};

  RatVector ex(n), ey(n);
  for (std::size_t x = 0; x < n; ++x) {
    ex[x] = 1;
    for (std::size_t y = 0; y < n; ++y) {
      ey[y] = 1;
      const RatVector want = B.eval_basis_left(x, ey);
      if (alg.bracket(out.phi.apply(ex), ey) != want ||
          alg.bracket(ex, out.psi.apply(ey)) != want)
        throw InternalError("phi/psi verification failed at basis pair (" + std::to_string(x) +
                            "," + std::to_string(y) + ")");
      ey[y] = 0;
    }
    ex[x] = 0;
  }
  return out;
}

/// Solves [f(x), y] = [x, f(y)] over all (not necessarily homogeneous) f.
inline LinearSolutionSpace solve_supercommuting(const SuperAlgebra& alg) {
  require_super_lie(alg);
  const std::size_t n = alg.dim();
  const detail::ScIndex sc(alg);

  SparseRref elim(n * n);
  detail::RowGroup group;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t t = 0; t < sc.pos_left[j].size(); ++t) {
        const auto [l, m] = sc.pos_left[j][t];
        group[m][l * n + i] += sc.val_left[j][t];
      }
      for (std::size_t t = 0; t < sc.pos_right[i].size(); ++t) {
        const auto [l, m] = sc.pos_right[i][t];
        group[m][l * n + j] -= sc.val_right[i][t];
      }
      std::vector<SparseRow> rows;
      detail::emit_rows(group, rows);
      for (auto& r : rows) elim.add_row(std::move(r));
    }

  LinearSolutionSpace out;
  out.tag = ConstraintTag::SupercommutingNew;
  out.degree = std::nullopt;
  out.algebra_name = alg.name;
  out.unknown_count = n * n;
  out.rank = elim.rank();
  for (const auto& v : elim.nullspace()) {
    RatMatrix m(n, n);
    for (std::size_t u = 0; u < v.size(); ++u)
      if (v[u] != 0) m.at(u / n, u % n) = v[u];
    out.basis.push_back(std::move(m));
  }
  return out;
}

/// First basis pair (i, j) with [f(e_i), e_j] != [e_i, f(e_j)], or nullopt.
inline std::optional<std::array<std::size_t, 2>> first_supercommuting_violation(
    const SuperAlgebra& alg, const RatMatrix& f) {
  const std::size_t n = alg.dim();
  if (f.rows() != n || f.cols() != n)
    throw DimensionError("map does not match the algebra dimension");
  RatVector ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i) {
    ei[i] = 1;
    const RatVector fei = f.apply(ei);
    for (std::size_t j = 0; j < n; ++j) {
      ej[j] = 1;
      const bool ok = alg.bracket(fei, ej) == alg.bracket(ei, f.apply(ej));
      ej[j] = 0;
      if (!ok) {
        ei[i] = 0;
        return std::array<std::size_t, 2>{i, j};
      }
    }
    ei[i] = 0;
  }
  return std::nullopt;
}

/// Solves the linearization of the Fan-Dai condition [f(x), x] = 0 over all
/// homogeneous x: the diagonal equations plus their polarizations within
/// each parity block (equivalent over the rationals).
inline LinearSolutionSpace solve_supercommuting_fan_dai(const SuperAlgebra& alg) {
  require_super_lie(alg);
  const std::size_t n = alg.dim();
  const detail::ScIndex sc(alg);

  SparseRref elim(n * n);
  detail::RowGroup group;
  auto flush = [&] {
    std::vector<SparseRow> rows;
    detail::emit_rows(group, rows);
    for (auto& r : rows) elim.add_row(std::move(r));
  };
  for (std::size_t i = 0; i < n; ++i) {
    // [f(e_i), e_i] = 0
    for (std::size_t t = 0; t < sc.pos_left[i].size(); ++t) {
      const auto [l, m] = sc.pos_left[i][t];
      group[m][l * n + i] += sc.val_left[i][t];
    }
    flush();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alg.space.parity(i) != alg.space.parity(j)) continue;
      // [f(e_i), e_j] + [f(e_j), e_i] = 0
      for (std::size_t t = 0; t < sc.pos_left[j].size(); ++t) {
        const auto [l, m] = sc.pos_left[j][t];
        group[m][l * n + i] += sc.val_left[j][t];
      }
      for (std::size_t t = 0; t < sc.pos_left[i].size(); ++t) {
        const auto [l, m] = sc.pos_left[i][t];
        group[m][l * n + j] += sc.val_left[i][t];
      }
      flush();
    }

  LinearSolutionSpace out;
  out.tag = ConstraintTag::SupercommutingFanDai;
  out.degree = std::nullopt;
  out.algebra_name = alg.name;
  out.unknown_count = n * n;
  out.rank = elim.rank();
  for (const auto& v : elim.nullspace()) {
    RatMatrix m(n, n);
    for (std::size_t u = 0; u < v.size(); ++u)
      if (v[u] != 0) m.at(u / n, u % n) = v[u];
    out.basis.push_back(std::move(m));
  }
  return out;
}

/// Checks the Fan-Dai condition pointwise: scans the homogeneous basis
/// vectors, then the polarized same-parity pairs, and returns the first
/// homogeneous witness x with [f(x), x] != 0 (pass = no witness).
struct FanDaiCheck {
  bool pass = true;
  std::optional<RatVector> witness;
};

inline FanDaiCheck is_supercommuting_fan_dai(const SuperAlgebra& alg, const RatMatrix& f) {
  const std::size_t n = alg.dim();
  if (f.rows() != n || f.cols() != n)
    throw DimensionError("map does not match the algebra dimension");
  RatVector e(n);
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = 1;
    const RatVector v = alg.bracket(f.apply(e), e);
    for (const auto& c : v)
      if (c != 0) return {false, e};
    e[i] = 0;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (alg.space.parity(i) != alg.space.parity(j)) continue;
      RatVector x(n);
      x[i] = 1;
      x[j] = 1;
      RatVector v = alg.bracket(f.apply(x), x);
      for (const auto& c : v)
        if (c != 0) return {false, x};
    }
  return {};
}

/// For f solving the supercommuting equations, B(x, y) = [f(x), y] is a
/// superbiderivation (new convention) of degree |f|.
inline GradedBilinearMap supercommuting_to_biderivation(const SuperAlgebra& alg,
                                                        const GradedLinearMap& f) {
  if (auto w = first_supercommuting_violation(alg, f.matrix))
    throw MembershipError("map is not supercommuting; first failure at basis pair (" +
                          std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + ")");
  const std::size_t n = alg.dim();
  CoeffTable coeffs;
  RatVector ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i) {
    ei[i] = 1;
    const RatVector fei = f.apply(ei);
    for (std::size_t j = 0; j < n; ++j) {
      ej[j] = 1;
      RatVector v = alg.bracket(fei, ej);
      ej[j] = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (v[k] != 0) coeffs.emplace(CoeffKey{i, j, k}, std::move(v[k]));
    }
    ei[i] = 0;
  }
  GradedBilinearMap out = checked_bilinear(alg.space, f.degree, std::move(coeffs));
  if (auto w = first_bider_violation(alg, out, BiderVariant::New))
    throw InternalError("induced bilinear map fails the biderivation equations");
  return out;
}

}  // namespace supalg
