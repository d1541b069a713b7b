#include <catch2/catch_amalgamated.hpp>

#include "supalg/catalog.hpp"

using namespace supalg;

TEST_CASE("two-dimensional example") {
  const SuperAlgebra a = example_2dim();
  REQUIRE(a.name == "example_2dim");
  REQUIRE(a.space.dim_even == 1);
  REQUIRE(a.space.dim_odd == 1);
  REQUIRE(a.space.basis_labels == std::vector<std::string>{"x", "v"});
  REQUIRE(a.sc == CoeffTable{{{1, 1, 0}, 1}});
  REQUIRE(check_super_skew(a).pass);
  REQUIRE(check_jacobi(a).pass);
}

TEST_CASE("heisenberg family") {
  REQUIRE_THROWS_AS(heisenberg(0), ValidationError);
  for (std::size_t n = 1; n <= 5; ++n) {
    const SuperAlgebra a = heisenberg(n);
    INFO(a.name);
    REQUIRE(a.space.dim_even == 1);
    REQUIRE(a.space.dim_odd == n);
    REQUIRE(a.space.label(0) == "c");
    REQUIRE(a.space.label(n) == "x" + std::to_string(n));
    REQUIRE(a.sc.size() == n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        REQUIRE(a.structure_constant(i, j, 0) == (i == j ? 1 : 0));
    REQUIRE(check_super_skew(a).pass);
    REQUIRE(check_jacobi(a).pass);
  }
}

TEST_CASE("derivation algebra of the heisenberg family") {
  REQUIRE_THROWS_AS(der_heisenberg(1), ValidationError);
  const SuperAlgebra a = der_heisenberg(3);
  REQUIRE(a.space.dim_even == 4);  // A, B12, B13, B23
  REQUIRE(a.space.dim_odd == 3);   // C1, C2, C3
  REQUIRE(a.space.basis_labels ==
          std::vector<std::string>{"A", "B12", "B13", "B23", "C1", "C2", "C3"});

  // [A, C_k] = C_k; A commutes with the rotations.
  for (std::size_t k = 4; k <= 6; ++k) {
    RatVector want(7);
    want[k] = 1;
    REQUIRE(a.bracket_basis(0, k) == want);
  }
  REQUIRE(a.bracket_basis(0, 1) == RatVector(7));

  // [B12, C2] = C1 and [B12, C1] = -C2; C3 is untouched.
  REQUIRE(a.bracket_basis(1, 5) == RatVector{0, 0, 0, 0, 1, 0, 0});
  REQUIRE(a.bracket_basis(1, 4) == RatVector{0, 0, 0, 0, 0, -1, 0});
  REQUIRE(a.bracket_basis(1, 6) == RatVector(7));

  // [B12, B13] = -B23 (rotation algebra relations with B_{ji} = -B_{ij}).
  REQUIRE(a.bracket_basis(1, 2) == RatVector{0, 0, 0, -1, 0, 0, 0});

  // Odd generators bracket to zero among themselves.
  for (std::size_t i = 4; i <= 6; ++i)
    for (std::size_t j = 4; j <= 6; ++j) REQUIRE(a.bracket_basis(i, j) == RatVector(7));

  for (std::size_t n = 2; n <= 4; ++n) {
    const SuperAlgebra d = der_heisenberg(n);
    INFO(d.name);
    REQUIRE(check_super_skew(d).pass);
    REQUIRE(check_jacobi(d).pass);
  }
}

TEST_CASE("solver-derived construction matches the bracket tables") {
  for (std::size_t n = 2; n <= 4; ++n) {
    INFO("n = " << n);
    REQUIRE(der_heisenberg_via_solver(n) == der_heisenberg(n));
  }
  REQUIRE_THROWS_AS(der_heisenberg_via_solver(1), ValidationError);
}

TEST_CASE("special linear superalgebra sl(1|2)") {
  const SuperAlgebra a = sl12();
  REQUIRE(a.space.dim_even == 4);
  REQUIRE(a.space.dim_odd == 4);
  REQUIRE(a.space.basis_labels ==
          std::vector<std::string>{"E1", "E2", "E3", "E4", "F1", "F2", "F3", "F4"});
  REQUIRE(check_super_skew(a).pass);
  REQUIRE(check_jacobi(a).pass);

  // [E3, E4] = E2 in the 3x3 supermatrix model.
  REQUIRE(a.bracket_basis(2, 3) == RatVector{0, 1, 0, 0, 0, 0, 0, 0});
  // Odd-odd bracket is an anticommutator: [F1, F3] = E1 + E2.
  REQUIRE(a.bracket_basis(4, 6) == RatVector{1, 1, 0, 0, 0, 0, 0, 0});
  REQUIRE(a.bracket_basis(6, 4) == RatVector{1, 1, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("abelian algebras") {
  const SuperAlgebra a = abelian(3, 2);
  REQUIRE(a.space.dim_even == 3);
  REQUIRE(a.space.dim_odd == 2);
  REQUIRE(a.sc.empty());
  REQUIRE(check_super_skew(a).pass);
  REQUIRE(check_jacobi(a).pass);
  REQUIRE(abelian(0, 0).dim() == 0);
}

TEST_CASE("catalog lookup parses ids strictly") {
  REQUIRE(catalog_lookup("example_2dim")->name == "example_2dim");
  REQUIRE(catalog_lookup("hs1")->name == "hs1");
  REQUIRE(catalog_lookup("hs12")->name == "hs12");
  REQUIRE(catalog_lookup("der_hs4")->name == "der_hs4");
  REQUIRE(catalog_lookup("sl12")->name == "sl12");
  const auto ab = catalog_lookup("abelian3_2");
  REQUIRE(ab.has_value());
  REQUIRE(ab->space.dim_even == 3);
  REQUIRE(ab->space.dim_odd == 2);

  for (const char* bad : {"", "hs", "hs0", "hs01", "der_hs", "der_hs1", "abelian", "abelian3",
                          "abelian3_", "abelian_2", "sl21", "HS2", "hs2 ", " hs2", "foo"}) {
    INFO("id: \"" << bad << "\"");
    REQUIRE_FALSE(catalog_lookup(bad).has_value());
  }
}

TEST_CASE("catalog entry listing") {
  const auto entries = catalog_entries();
  REQUIRE(entries.size() == 5);
  REQUIRE(entries[0].id == "example_2dim");
  REQUIRE(entries[1].id == "hs<n>");
  REQUIRE(entries[2].id == "der_hs<n>");
  REQUIRE(entries[3].id == "sl12");
  REQUIRE(entries[4].id == "abelian<n0>_<n1>");
  for (const auto& e : entries) REQUIRE_FALSE(e.description.empty());
}
