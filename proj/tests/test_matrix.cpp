#include <catch2/catch_amalgamated.hpp>

#include "supalg/matrix.hpp"
#include "supalg/random_gen.hpp"
#include "supalg/sparse_rref.hpp"

using namespace supalg;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

// Independent rank oracle: fraction-free Bareiss elimination over exact
// rationals (integer pivoting pattern differs from Gauss-Jordan on purpose).
std::size_t bareiss_rank(RatMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t rank = 0;
  Rational prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    for (std::size_t r = rank + 1; r < rows; ++r)
      for (std::size_t c = col + 1; c < cols; ++c)
        m.at(r, c) = (m.at(rank, col) * m.at(r, c) - m.at(r, col) * m.at(rank, c)) / prev;
    for (std::size_t r = rank + 1; r < rows; ++r) m.at(r, col) = 0;
    prev = m.at(rank, col);
    ++rank;
  }
  return rank;
}

RatMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.below(3) != 0) m.at(r, c) = random_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("basic matrix algebra") {
  const RatMatrix a = from_rows({{1, 2}, {3, 4}});
  const RatMatrix b = from_rows({{0, 1}, {1, 0}});
  REQUIRE(a * b == from_rows({{2, 1}, {4, 3}}));
  REQUIRE(a + b == from_rows({{1, 3}, {4, 4}}));
  REQUIRE(a - a == RatMatrix(2, 2));
  REQUIRE((a - a).is_zero());
  REQUIRE(a.transposed() == from_rows({{1, 3}, {2, 4}}));
  REQUIRE(a.scaled(make_rational(1, 2)) == from_rows({{1, 2}, {3, 4}}).scaled(make_rational(1, 2)));
  REQUIRE(RatMatrix::identity(2) * a == a);
  REQUIRE(a.apply(RatVector{1, 1}) == RatVector{3, 7});
  REQUIRE_THROWS_AS(a * RatMatrix(3, 3), DimensionError);
  REQUIRE_THROWS_AS(a + RatMatrix(3, 3), DimensionError);
  REQUIRE_THROWS_AS(a.apply(RatVector{1, 2, 3}), DimensionError);
}

TEST_CASE("reduced row echelon form is canonical") {
  const RatMatrix m = from_rows({{2, 4, 6}, {1, 2, 4}});
  const RrefResult r = rref(m);
  REQUIRE(r.rank == 2);
  REQUIRE(r.pivot_cols == std::vector<std::size_t>{0, 2});
  REQUIRE(r.matrix == from_rows({{1, 2, 0}, {0, 0, 1}}));

  // Row scaling and permutation do not change the reduced form.
  const RatMatrix shuffled = from_rows({{3, 6, 12}, {-1, -2, -3}});
  REQUIRE(rref(shuffled).matrix == r.matrix);
  REQUIRE(rank(m) == 2);
  REQUIRE(rank(RatMatrix(3, 3)) == 0);
}

TEST_CASE("nullspace uses the free-column convention") {
  // x0 + 2 x1 + 3 x3 = 0, x2 + 4 x3 = 0; free columns are 1 and 3.
  const RatMatrix m = from_rows({{1, 2, 0, 3}, {0, 0, 1, 4}});
  const std::vector<RatVector> ns = nullspace(m);
  REQUIRE(ns.size() == 2);
  REQUIRE(ns[0] == RatVector{-2, 1, 0, 0});
  REQUIRE(ns[1] == RatVector{-3, 0, -4, 1});
  for (const auto& v : ns) REQUIRE(m.apply(v) == RatVector(m.rows()));

  REQUIRE(nullspace(RatMatrix::identity(3)).empty());
}

TEST_CASE("solve returns the particular solution with zero free variables") {
  const RatMatrix m = from_rows({{1, 2, 0}, {0, 0, 1}});
  const auto x = solve(m, RatVector{5, 7});
  REQUIRE(x.has_value());
  REQUIRE(*x == RatVector{5, 0, 7});

  // Inconsistent system.
  const RatMatrix bad = from_rows({{1, 1}, {2, 2}});
  REQUIRE_FALSE(solve(bad, RatVector{1, 3}).has_value());
  REQUIRE(solve(bad, RatVector{1, 2}).has_value());
}

TEST_CASE("span predicates") {
  const std::vector<RatVector> basis{{1, 0, 1}, {0, 1, 1}};
  REQUIRE(in_span(basis, RatVector{2, 3, 5}));
  REQUIRE_FALSE(in_span(basis, RatVector{1, 0, 0}));
  const std::vector<RatVector> other{{1, 1, 2}, {1, -1, 0}};
  REQUIRE(same_span(basis, other, 3));
  REQUIRE_FALSE(same_span(basis, {{1, 0, 0}, {0, 1, 0}}, 3));
  REQUIRE(same_span({}, {}, 3));
}

TEST_CASE("stack_rows concatenates row vectors") {
  const RatMatrix m = stack_rows({{1, 2}, {3, 4}, {5, 6}}, 2);
  REQUIRE(m.rows() == 3);
  REQUIRE(m.at(2, 1) == 6);
}

TEST_CASE("sparse elimination matches the dense reduction exactly") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    const RatMatrix m = random_matrix(rng, rows, cols);

    SparseRref elim(cols);
    for (std::size_t r = 0; r < rows; ++r) elim.add_dense_row(m.row(r));

    const RrefResult dense = rref(m);
    REQUIRE(elim.rank() == dense.rank);
    REQUIRE(elim.pivot_columns() == dense.pivot_cols);

    const auto reduced = elim.reduced_rows();
    for (std::size_t r = 0; r < reduced.size(); ++r)
      REQUIRE(sparse_to_dense(reduced[r], cols) == dense.matrix.row(r));

    const auto sn = elim.nullspace();
    const auto dn = nullspace(m);
    REQUIRE(sn == dn);
  }
}

TEST_CASE("gaussian rank agrees with fraction-free elimination") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
    const RatMatrix m = random_matrix(rng, rows, cols);
    REQUIRE(rank(m) == bareiss_rank(m));
  }
}

TEST_CASE("nullspace vectors always satisfy the system") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    const RatMatrix m = random_matrix(rng, rows, cols);
    const auto ns = nullspace(m);
    REQUIRE(ns.size() == cols - rref(m).rank);
    for (const auto& v : ns) REQUIRE(m.apply(v) == RatVector(rows));
  }
}
