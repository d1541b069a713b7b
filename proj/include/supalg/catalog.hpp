#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "supalg/operator_spaces.hpp"

namespace supalg {

/// dim (1|1), basis {x ; v} with [v, v] = x: the smallest superalgebra whose
/// odd self-bracket is nonzero.
inline SuperAlgebra example_2dim() {
  SuperVectorSpace s{1, 1, {"x", "v"}};
  return make_super_algebra(s, "example_2dim", {{1, 1, 0, Rational(1)}});
}

/// Super Heisenberg algebra hs(n): dim (1|n), basis {c ; x_1..x_n} with
/// [x_i, x_i] = c and all other products zero.
inline SuperAlgebra heisenberg(std::size_t n) {
  if (n < 1) throw ValidationError("heisenberg(n) requires n >= 1");
  SuperVectorSpace s{1, n, {}};
  s.basis_labels.push_back("c");
  for (std::size_t i = 1; i <= n; ++i) s.basis_labels.push_back("x" + std::to_string(i));
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  for (std::size_t i = 1; i <= n; ++i) entries.emplace_back(i, i, 0, Rational(1));
  return make_super_algebra(s, "hs" + std::to_string(n), entries);
}

namespace detail {

inline std::string b_label(std::size_t i, std::size_t j) {
  if (i < 10 && j < 10) return "B" + std::to_string(i) + std::to_string(j);
  return "B" + std::to_string(i) + "_" + std::to_string(j);
}

// Layout of der(hs(n)): [A, B_{ij} for 1 <= i < j <= n in lex order, C_1..C_n].
struct DerHsLayout {
  std::size_t n;
  std::size_t pairs;

  explicit DerHsLayout(std::size_t n) : n(n), pairs(n * (n - 1) / 2) {}

  std::size_t dim_even() const { return 1 + pairs; }
  std::size_t dim_odd() const { return n; }

  // 1-based i < j.
  std::size_t b_index(std::size_t i, std::size_t j) const {
    return 1 + (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
  }
  std::size_t c_index(std::size_t k) const { return 1 + pairs + (k - 1); }

  // Signed index of B_{ij} for arbitrary i != j: B_{ji} = -B_{ij}.
  std::pair<int, std::size_t> b_signed(std::size_t i, std::size_t j) const {
    return i < j ? std::make_pair(1, b_index(i, j)) : std::make_pair(-1, b_index(j, i));
  }
};

}  // namespace detail

/// The derivation algebra of hs(n) on its canonical generators, n >= 2:
/// even part spanned by A (the grading operator) and the rotations B_{ij}
/// (i < j), odd part by C_1..C_n, with
///   [A, C_k] = C_k,
///   [B_{ij}, C_k] = delta_{kj} C_i - delta_{ki} C_j,
///   [B_{ij}, B_{kl}] = delta_{jk} B_{il} + delta_{il} B_{jk}
///                    + delta_{jl} B_{ki} + delta_{ki} B_{lj},
/// all C-C products zero (and B_{ji} understood as -B_{ij}).
inline SuperAlgebra der_heisenberg(std::size_t n) {
  if (n < 2) throw ValidationError("der_heisenberg(n) requires n >= 2");
  const detail::DerHsLayout lay(n);

  SuperVectorSpace s{lay.dim_even(), lay.dim_odd(), {}};
  s.basis_labels.push_back("A");
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) s.basis_labels.push_back(detail::b_label(i, j));
  for (std::size_t k = 1; k <= n; ++k) s.basis_labels.push_back("C" + std::to_string(k));

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  auto add = [&](std::size_t r, std::size_t c, std::size_t k, long v) {
    if (v != 0) entries.emplace_back(r, c, k, Rational(v));
  };

  for (std::size_t k = 1; k <= n; ++k) {
    add(0, lay.c_index(k), lay.c_index(k), 1);
    add(lay.c_index(k), 0, lay.c_index(k), -1);
  }

  auto delta = [](std::size_t a, std::size_t b) -> long { return a == b ? 1 : 0; };

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const std::size_t bij = lay.b_index(i, j);
      add(bij, lay.c_index(j), lay.c_index(i), 1);
      add(bij, lay.c_index(i), lay.c_index(j), -1);
      add(lay.c_index(j), bij, lay.c_index(i), -1);
      add(lay.c_index(i), bij, lay.c_index(j), 1);
    }

  // B-B products: accumulate the four delta terms, folding B_{ba} = -B_{ab}.
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l) {
          std::map<std::size_t, long> acc;
          auto fold = [&](long coeff, std::size_t a, std::size_t b) {
            if (coeff == 0 || a == b) return;
            auto [sgn, idx] = lay.b_signed(a, b);
            acc[idx] += coeff * sgn;
          };
          fold(delta(j, k), i, l);
          fold(delta(i, l), j, k);
          fold(delta(j, l), k, i);
          fold(delta(k, i), l, j);
          for (const auto& [idx, v] : acc)
            add(lay.b_index(i, j), lay.b_index(k, l), idx, v);
        }

  return make_super_algebra(s, "der_hs" + std::to_string(n), entries);
}

/// Rebuilds der(hs(n)) from first principles: solves the super-derivation
/// equations on hs(n), verifies the canonical generators span the solution
/// space, and reads the structure constants off supercommutators of the
/// generator matrices.  Must agree with der_heisenberg(n) exactly.
inline SuperAlgebra der_heisenberg_via_solver(std::size_t n) {
  if (n < 2) throw ValidationError("der_heisenberg_via_solver(n) requires n >= 2");
  const SuperAlgebra h = heisenberg(n);
  const std::size_t hn = h.dim();
  const detail::DerHsLayout lay(n);

  const LinearSolutionSpace even = solve_type1(h, 0);
  const LinearSolutionSpace odd = solve_type1(h, 1);
  if (even.dimension() != lay.dim_even() || odd.dimension() != lay.dim_odd())
    throw InternalError("derivation space of hs(" + std::to_string(n) +
                        ") has unexpected dimension");

  // Canonical generator matrices on hs(n) with its basis order [c, x_1..x_n].
  std::vector<GradedLinearMap> gens;
  {
    RatMatrix A(hn, hn);
    A.at(0, 0) = 2;
    for (std::size_t i = 1; i <= n; ++i) A.at(i, i) = 1;
    gens.push_back(GradedLinearMap{0, std::move(A)});
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      RatMatrix B(hn, hn);
      B.at(i, j) = 1;
      B.at(j, i) = -1;
      gens.push_back(GradedLinearMap{0, std::move(B)});
    }
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix C(hn, hn);
    C.at(0, k) = 1;
    gens.push_back(GradedLinearMap{1, std::move(C)});
  }

  // Each generator must solve the equations and lie in the solver span; the
  // generators must be independent, so they are a basis of the solution.
  std::vector<RatVector> even_rows, odd_rows;
  for (const auto& s : {even, odd})
    for (const auto& m : s.basis) {
      RatVector v(hn * hn);
      for (std::size_t r = 0; r < hn; ++r)
        for (std::size_t c = 0; c < hn; ++c) v[r * hn + c] = m.at(r, c);
      (s.degree == 0u ? even_rows : odd_rows).push_back(std::move(v));
    }
  SparseRref indep(hn * hn);
  for (const auto& g : gens) {
    if (first_type1_violation(h, g))
      throw InternalError("canonical generator is not a derivation of hs(" + std::to_string(n) +
                          ")");
    RatVector v(hn * hn);
    for (std::size_t r = 0; r < hn; ++r)
      for (std::size_t c = 0; c < hn; ++c) v[r * hn + c] = g.matrix.at(r, c);
    if (!in_span(g.degree == 0 ? even_rows : odd_rows, v))
      throw InternalError("canonical generator escapes the solved derivation space");
    indep.add_row(dense_to_sparse(v));
  }
  if (indep.rank() != gens.size())
    throw InternalError("canonical generators of der(hs) are not independent");

  // Express each supercommutator of generators in the generator basis.
  const std::size_t N = gens.size();
  RatMatrix gen_cols(hn * hn, N);
  for (std::size_t g = 0; g < N; ++g)
    for (std::size_t r = 0; r < hn; ++r)
      for (std::size_t c = 0; c < hn; ++c) gen_cols.at(r * hn + c, g) = gens[g].matrix.at(r, c);

  SuperVectorSpace s{lay.dim_even(), lay.dim_odd(), der_heisenberg(n).space.basis_labels};
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      const GradedLinearMap br = supercommutator(gens[p], gens[q]);
      RatVector rhs(hn * hn);
      for (std::size_t r = 0; r < hn; ++r)
        for (std::size_t c = 0; c < hn; ++c) rhs[r * hn + c] = br.matrix.at(r, c);
      auto coords = solve(gen_cols, rhs);
      if (!coords) throw InternalError("derivation space of hs(n) is not closed under brackets");
      for (std::size_t k = 0; k < N; ++k)
        if ((*coords)[k] != 0) entries.emplace_back(p, q, k, (*coords)[k]);
    }
  return make_super_algebra(s, "der_hs" + std::to_string(n), entries);
}

/// The special linear superalgebra sl(1|2) realized inside the 3x3
/// supermatrices with block sizes (1|2): dim (4|4), even basis
/// E1 = e11+e33, E2 = e22-e33, E3 = e23, E4 = e32 and odd basis
/// F1 = e12, F2 = e13, F3 = e21, F4 = e31, bracket the supercommutator.
inline SuperAlgebra sl12() {
  // 3x3 matrices with supertrace zero; row/col 1 is even, rows/cols 2-3 odd.
  const std::size_t N = 3;
  auto unit = [&](std::size_t r, std::size_t c) {
    RatMatrix m(N, N);
    m.at(r, c) = 1;
    return m;
  };
  std::vector<RatMatrix> basis;
  basis.push_back(unit(0, 0) + unit(2, 2));  // E1
  basis.push_back(unit(1, 1) - unit(2, 2));  // E2
  basis.push_back(unit(1, 2));               // E3
  basis.push_back(unit(2, 1));               // E4
  basis.push_back(unit(0, 1));               // F1
  basis.push_back(unit(0, 2));               // F2
  basis.push_back(unit(1, 0));               // F3
  basis.push_back(unit(2, 0));               // F4

  auto mat_parity = [](std::size_t idx) -> unsigned { return idx < 4 ? 0u : 1u; };

  RatMatrix cols(N * N, basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) cols.at(r * N + c, b) = basis[b].at(r, c);

  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      RatMatrix ij = basis[i] * basis[j];
      RatMatrix ji = basis[j] * basis[i];
      RatMatrix br = (parity_sign(mat_parity(i), mat_parity(j)) == 1) ? ij - ji : ij + ji;
      RatVector rhs(N * N);
      for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) rhs[r * N + c] = br.at(r, c);
      auto coords = solve(cols, rhs);
      if (!coords) throw InternalError("sl(1|2) basis is not closed under the supercommutator");
      for (std::size_t k = 0; k < basis.size(); ++k)
        if ((*coords)[k] != 0) entries.emplace_back(i, j, k, (*coords)[k]);
    }

  SuperVectorSpace s{4, 4, {"E1", "E2", "E3", "E4", "F1", "F2", "F3", "F4"}};
  return make_super_algebra(s, "sl12", entries);
}

/// Abelian superalgebra of dimension (n0 | n1): every bracket is zero.
inline SuperAlgebra abelian(std::size_t n0, std::size_t n1) {
  SuperVectorSpace s{n0, n1, {}};
  for (std::size_t i = 0; i < n0 + n1; ++i) s.basis_labels.push_back("e" + std::to_string(i));
  return make_super_algebra(s, "abelian" + std::to_string(n0) + "_" + std::to_string(n1), {});
}

/// Parses a catalog identifier: example_2dim, hs<n>, der_hs<n>, sl12,
/// abelian<n0>_<n1>.  Returns nullopt for unknown ids.
inline std::optional<SuperAlgebra> catalog_lookup(const std::string& id) {
  auto parse_uint = [](const std::string& s, std::size_t& out) {
    if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + static_cast<std::size_t>(c - '0');
      if (out > 1000) return false;
    }
    return true;
  };
  try {
    if (id == "example_2dim") return example_2dim();
    if (id == "sl12") return sl12();
    if (id.rfind("der_hs", 0) == 0) {
      std::size_t n;
      if (parse_uint(id.substr(6), n) && n >= 2) return der_heisenberg(n);
      return std::nullopt;
    }
    if (id.rfind("hs", 0) == 0) {
      std::size_t n;
      if (parse_uint(id.substr(2), n) && n >= 1) return heisenberg(n);
      return std::nullopt;
    }
    if (id.rfind("abelian", 0) == 0) {
      const std::string rest = id.substr(7);
      auto us = rest.find('_');
      if (us == std::string::npos) return std::nullopt;
      std::size_t n0, n1;
      if (parse_uint(rest.substr(0, us), n0) && parse_uint(rest.substr(us + 1), n1))
        return abelian(n0, n1);
    }
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  return std::nullopt;
}

struct CatalogEntry {
  std::string id;
  std::string description;
};

inline std::vector<CatalogEntry> catalog_entries() {
  return {
      {"example_2dim", "dim (1|1): odd v with [v,v] = x"},
      {"hs<n>", "super Heisenberg algebra, dim (1|n), n >= 1"},
      {"der_hs<n>", "derivation algebra of hs(n), dim (1+n(n-1)/2|n), n >= 2"},
      {"sl12", "special linear superalgebra sl(1|2), dim (4|4)"},
      {"abelian<n0>_<n1>", "abelian superalgebra of dim (n0|n1)"},
  };
}

}  // namespace supalg
