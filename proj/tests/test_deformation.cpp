#include <catch2/catch_amalgamated.hpp>

#include "supalg/biderivations.hpp"
#include "supalg/catalog.hpp"
#include "supalg/deformation.hpp"
#include "supalg/random_gen.hpp"

using namespace supalg;

namespace {

CoeffTable scaled_table(const CoeffTable& t, const Rational& s) {
  CoeffTable out;
  if (s != 0)
    for (const auto& [k, v] : t) out.emplace(k, v * s);
  return out;
}

}  // namespace

TEST_CASE("deforming along the bracket rescales the structure constants") {
  const SuperAlgebra a = der_heisenberg(3);
  const GradedBilinearMap br = a.bracket_tensor();

  for (const Rational& lam : {Rational(1), Rational(-1), make_rational(1, 2), Rational(0)}) {
    const DeformationResult r = deform(a, br, lam);
    INFO("lambda = " << to_string(lam));
    REQUIRE(r.deformed.sc == scaled_table(a.sc, 1 + lam));
    REQUIRE(r.grading_ok);
    REQUIRE(r.skew_ok);
    REQUIRE(r.jacobi_ok);
    REQUIRE(r.is_lie());
    REQUIRE(deformed_is_lie(r));
    REQUIRE(r.lambda == lam);
    REQUIRE(r.deformed.name == "der_hs3_deformed");
  }

  // lambda = -1 collapses to the abelian product.
  REQUIRE(deform(a, br, Rational(-1)).deformed.sc.empty());
}

TEST_CASE("zero perturbation changes nothing") {
  const SuperAlgebra a = sl12();
  const DeformationResult r = deform(a, GradedBilinearMap{0, {}}, Rational(7));
  REQUIRE(r.deformed.sc == a.sc);
  REQUIRE(r.is_lie());
}

TEST_CASE("deforming along the solved biderivation line") {
  const SuperAlgebra a = der_heisenberg(3);
  const BilinearSolutionSpace deg0 = solve_biderivations(a, 0, BiderVariant::New);
  REQUIRE(deg0.dimension() == 1);

  // The canonical basis element is -1 times the bracket, so lambda = 1/2
  // scales the product by 1/2...
  const DeformationResult r = deform(a, deg0.basis[0], make_rational(1, 2));
  REQUIRE(r.deformed.sc == scaled_table(a.sc, make_rational(1, 2)));
  REQUIRE(r.jacobi_ok);

  // ...and the bracket itself (a member of the same line) gives 3/2.
  const DeformationResult r2 = deform(a, a.bracket_tensor(), make_rational(1, 2));
  REQUIRE(r2.deformed.sc == scaled_table(a.sc, make_rational(3, 2)));
  REQUIRE(r2.jacobi_ok);
}

TEST_CASE("a skew non-biderivation can break the Jacobi identity") {
  const SuperAlgebra a = abelian(3, 0);
  const GradedBilinearMap b{0,
                            {{{0, 1, 2}, 1},
                             {{1, 0, 2}, -1},
                             {{0, 2, 0}, 1},
                             {{2, 0, 0}, -1},
                             {{1, 2, 1}, 1},
                             {{2, 1, 1}, -1}}};
  REQUIRE_FALSE(first_skew_violation(a.space, b).has_value());

  const DeformationResult r = deform(a, b, Rational(1));
  REQUIRE(r.grading_ok);
  REQUIRE(r.skew_ok);
  REQUIRE_FALSE(r.jacobi_ok);
  REQUIRE(r.jacobi_witness == CoeffKey{0, 1, 2});
  REQUIRE_FALSE(r.is_lie());
  REQUIRE_FALSE(deformed_is_lie(r));
}

TEST_CASE("odd perturbations are rejected") {
  const SuperAlgebra a = example_2dim();
  const GradedBilinearMap odd{1, {{{1, 1, 1}, 1}}};
  REQUIRE_THROWS_AS(deform(a, odd, Rational(1)), ValidationError);
}

TEST_CASE("mismatched dimensions are rejected") {
  const SuperAlgebra a = example_2dim();
  const GradedBilinearMap big{0, {{{4, 4, 0}, 1}}};
  REQUIRE_THROWS_AS(deform(a, big, Rational(1)), ValidationError);
}

TEST_CASE("lambda accumulates additively") {
  const SuperAlgebra a = der_heisenberg(3);
  SplitMix64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    const GradedBilinearMap b = random_skew_bilinear(rng, a.space);
    const Rational l1 = random_rational(rng), l2 = random_rational(rng);
    const DeformationResult once = deform(a, b, l1 + l2);
    const DeformationResult twice = deform(deform(a, b, l1).deformed, b, l2);
    REQUIRE(once.deformed.sc == twice.deformed.sc);
    REQUIRE(once.skew_ok);  // skew perturbations keep the product skew
    REQUIRE(once.grading_ok);
  }
}

TEST_CASE("non-skew perturbations are reported, not rejected") {
  const SuperAlgebra a = abelian(2, 0);
  const GradedBilinearMap b{0, {{{0, 1, 0}, 1}, {{1, 0, 0}, 1}}};  // symmetric
  const DeformationResult r = deform(a, b, Rational(1));
  REQUIRE_FALSE(r.skew_ok);
  REQUIRE(r.skew_witness.has_value());
  REQUIRE_FALSE(r.is_lie());
}
