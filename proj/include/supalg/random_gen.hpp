#pragma once

#include <cstdint>
#include <vector>

#include "supalg/catalog.hpp"

namespace supalg {

/// Deterministic 64-bit generator (splitmix64).  Used instead of <random>
/// engines so that seeded test streams are identical across standard library
/// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); determinism matters here, perfect
  /// uniformity does not.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

/// Small random scalar: numerator in [-3, 3], denominator in {1, 2, 3}.
inline Rational random_rational(SplitMix64& rng) {
  return make_rational(rng.range(-3, 3), rng.range(1, 3));
}

inline Rational random_nonzero_rational(SplitMix64& rng) {
  for (;;) {
    Rational r = random_rational(rng);
    if (r != 0) return r;
  }
}

inline RatVector random_vector(SplitMix64& rng, std::size_t n) {
  RatVector v(n);
  for (auto& x : v) x = random_rational(rng);
  return v;
}

/// Random member of a solved space: a random rational combination of its
/// canonical basis.
inline RatMatrix random_member(SplitMix64& rng, const LinearSolutionSpace& space,
                               std::size_t ambient_dim) {
  RatMatrix m(ambient_dim, ambient_dim);
  for (const auto& b : space.basis) {
    const Rational c = random_rational(rng);
    if (c != 0) m = m + b.scaled(c);
  }
  return m;
}

/// Random invertible parity-preserving change of basis (block diagonal with
/// small integer entries; redrawn until both blocks are invertible).
inline RatMatrix random_basis_change(SplitMix64& rng, const SuperVectorSpace& s) {
  const std::size_t n = s.dim();
  for (;;) {
    RatMatrix t(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (s.parity(r) == s.parity(c)) t.at(r, c) = rng.range(-2, 2);
    if (rank(t) == n) return t;
  }
}

/// A pseudo-random super Lie algebra: a small catalog seed conjugated by a
/// random parity-preserving invertible matrix.  Always satisfies the axioms;
/// structure constants are generally dense and non-integral.
inline SuperAlgebra random_super_lie_algebra(SplitMix64& rng) {
  SuperAlgebra seed = [&] {
    switch (rng.below(7)) {
      case 0: return example_2dim();
      case 1: return heisenberg(1);
      case 2: return heisenberg(2);
      case 3: return heisenberg(3);
      case 4: return der_heisenberg(2);
      case 5: return abelian(2, 2);
      default: return abelian(1, 2);
    }
  }();
  const std::size_t n = seed.dim();
  const RatMatrix t = random_basis_change(rng, seed.space);

  // New basis g_p has coordinates t(:, p); solve t x = [g_p, g_q] for the
  // structure constants in the new basis.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const RatVector w = seed.bracket(t.column(p), t.column(q));
      auto x = solve(t, w);
      if (!x) throw InternalError("basis change is singular");
      for (std::size_t k = 0; k < n; ++k)
        if ((*x)[k] != 0) entries.emplace_back(p, q, k, (*x)[k]);
    }
  SuperVectorSpace space{seed.space.dim_even, seed.space.dim_odd, {}};
  return make_super_algebra(space, seed.name + "_rnd", entries);
}

/// Random grading-admissible degree-0 bilinear map that is super-skew:
/// free entries are the pairs i < j and the odd diagonal.
inline GradedBilinearMap random_skew_bilinear(SplitMix64& rng, const SuperVectorSpace& s) {
  const std::size_t n = s.dim();
  CoeffTable coeffs;
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, Rational v) {
    coeffs.emplace(CoeffKey{i, j, k}, std::move(v));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (((s.parity(i) + s.parity(j)) & 1u) != s.parity(k)) continue;
        if (i == j && s.parity(i) == 0) continue;  // forced zero by skew-symmetry
        if (rng.below(3) != 0) continue;           // keep the tensor sparse
        const Rational v = random_nonzero_rational(rng);
        put(i, j, k, v);
        if (i != j) put(j, i, k, -parity_sign(s.parity(i), s.parity(j)) * v);
      }
  return checked_bilinear(s, 0, std::move(coeffs));
}

}  // namespace supalg
