#pragma once

#include <optional>
#include <string>
#include <utility>

#include "supalg/superalgebra.hpp"

namespace supalg {

/// A first-order deformation [x, y]_B = [x, y] + lambda B(x, y) together
/// with the verification of the super Lie axioms for the new product.
struct DeformationResult {
  SuperAlgebra deformed;
  Rational lambda;
  bool grading_ok = false;
  bool skew_ok = false;
  bool jacobi_ok = false;
  std::optional<CoeffKey> skew_witness;
  std::optional<CoeffKey> jacobi_witness;

  bool is_lie() const noexcept { return grading_ok && skew_ok && jacobi_ok; }
};

/// Deforms the bracket by a degree-0 bilinear map.  The perturbation must be
/// even (otherwise the deformed product would not be a graded product on the
/// same space); super-skew-symmetry and Jacobi of the result are *measured*,
/// not assumed, and recorded in the certificate.
inline DeformationResult deform(const SuperAlgebra& alg, const GradedBilinearMap& B,
                                const Rational& lambda) {
  if (B.degree != 0)
    throw ValidationError("bracket deformations require a degree-0 bilinear map");

  CoeffTable sc = alg.sc;
  for (const auto& [key, v] : B.coeffs) {
    const auto [i, j, k] = key;
    if (i >= alg.dim() || j >= alg.dim() || k >= alg.dim())
      throw ValidationError("deformation coefficients exceed the algebra dimension");
    auto it = sc.find(key);
    if (it == sc.end()) {
      Rational add = lambda * v;
      if (add != 0) sc.emplace(key, std::move(add));
    } else {
      it->second += lambda * v;
      if (it->second == 0) sc.erase(it);
    }
  }

  DeformationResult out{SuperAlgebra{alg.space, alg.name + "_deformed", std::move(sc)}, lambda};

  // Grading of the merged table: guaranteed when B came through the checked
  // constructors, but re-verified since the certificate asserts it.
  out.grading_ok = true;
  for (const auto& [key, v] : out.deformed.sc) {
    const auto [i, j, k] = key;
    if (((alg.space.parity(i) + alg.space.parity(j)) & 1u) != alg.space.parity(k)) {
      out.grading_ok = false;
      break;
    }
  }

  const AxiomCheck skew = check_super_skew(out.deformed);
  out.skew_ok = skew.pass;
  out.skew_witness = skew.witness;
  const AxiomCheck jac = check_jacobi(out.deformed);
  out.jacobi_ok = jac.pass;
  out.jacobi_witness = jac.witness;
  return out;
}

inline bool deformed_is_lie(const DeformationResult& r) { return r.is_lie(); }

}  // namespace supalg
