// supalg: exact computation kernel for finite-dimensional Lie superalgebras.
//
// JSON-first command line front end: every subcommand prints a deterministic
// JSON document (stable key order, canonical rationals); `--human` renders a
// plain-text view instead.  Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 input error.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "supalg/catalog.hpp"
#include "supalg/json_io.hpp"
#include "supalg/verification.hpp"

namespace {

using namespace supalg;

SuperAlgebra resolve_algebra(const std::string& ref) {
  const std::string prefix = "catalog:";
  if (ref.rfind(prefix, 0) == 0) {
    const std::string id = ref.substr(prefix.size());
    auto a = catalog_lookup(id);
    if (!a) throw IoError("unknown catalog id \"" + id + "\"");
    return *a;
  }
  if (std::filesystem::exists(ref)) return load_algebra(ref);
  if (auto a = catalog_lookup(ref)) return *a;
  throw IoError("cannot open \"" + ref + "\": no such file and not a catalog id");
}

GradedBilinearMap resolve_bilinear(const std::string& ref, const SuperAlgebra& a) {
  if (ref == "bracket") return a.bracket_tensor();
  return load_bilinear(ref, a.space);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_matrix(std::ostream& os, const RatMatrix& m, const std::string& indent) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << " " << to_string(m.at(r, c));
    os << " ]\n";
  }
}

void print_linear_space(const LinearSolutionSpace& s) {
  std::cout << "tag: " << tag_name(s.tag) << "\n";
  std::cout << "degree: " << (s.degree ? std::to_string(*s.degree) : std::string("both")) << "\n";
  std::cout << "dimension: " << s.dimension() << "\n";
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    std::cout << "basis " << i + 1 << ":\n";
    print_matrix(std::cout, s.basis[i], "  ");
  }
}

void print_bilinear_space(const BilinearSolutionSpace& s) {
  std::cout << "tag: " << tag_name(s.tag) << "\n";
  std::cout << "degree: " << s.degree << "\n";
  std::cout << "dimension: " << s.dimension() << "\n";
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    std::cout << "basis " << i + 1 << ":\n";
    for (const auto& [key, v] : s.basis[i].coeffs)
      std::cout << "  b[" << key[0] << "," << key[1] << "," << key[2] << "] = " << to_string(v)
                << "\n";
  }
}

int run_check(const std::string& ref, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const AxiomCheck skew = check_super_skew(a);
  const AxiomCheck jac = check_jacobi(a);
  const bool pass = skew.pass && jac.pass;
  if (human) {
    std::cout << "algebra: " << a.name << "\n";
    std::cout << "super-skew: " << (skew.pass ? "pass" : "FAIL") << "\n";
    std::cout << "jacobi: " << (jac.pass ? "pass" : "FAIL") << "\n";
  } else {
    json j;
    j["algebra"] = a.name;
    j["super_skew"] = {{"pass", skew.pass}, {"witness", witness_to_json(skew.witness)}};
    j["jacobi"] = {{"pass", jac.pass}, {"witness", witness_to_json(jac.witness)}};
    j["pass"] = pass;
    emit(j);
  }
  return pass ? 0 : 1;
}

int run_center(const std::string& ref, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const std::vector<RatVector> basis = center(a);
  if (human) {
    std::cout << "tag: center\ndegree: both\ndimension: " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::cout << "basis " << i + 1 << ":";
      for (const auto& x : basis[i]) std::cout << " " << to_string(x);
      std::cout << "\n";
    }
    return 0;
  }
  json j;
  j["tag"] = "center";
  j["degree"] = "both";
  j["dimension"] = basis.size();
  json rows = json::array();
  for (const auto& v : basis) rows.push_back(vector_to_json(v));
  j["basis"] = rows;
  emit(j);
  return 0;
}

std::vector<unsigned> degrees_from_flag(const std::string& flag) {
  if (flag == "both") return {0, 1};
  return {static_cast<unsigned>(flag == "1")};
}

int run_derivations(const std::string& ref, const std::string& degree, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  std::vector<json> out;
  for (unsigned d : degrees_from_flag(degree)) {
    const LinearSolutionSpace s = solve_type1(a, d);
    if (human)
      print_linear_space(s);
    else
      out.push_back(linear_space_to_json(s));
  }
  if (!human) emit(out.size() == 1 ? out[0] : json(out));
  return 0;
}

int run_type2(const std::string& ref, const std::string& degree, bool inner, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  std::vector<json> out;
  for (unsigned d : degrees_from_flag(degree)) {
    const LinearSolutionSpace s = solve_type2(a, d);
    if (human) {
      print_linear_space(s);
      continue;
    }
    if (!inner) {
      out.push_back(linear_space_to_json(s));
      continue;
    }
    json w;
    w["space"] = linear_space_to_json(s);
    if (!is_complete(a).complete) {
      w["inner_decomposition"] = "not attempted";
    } else {
      json vecs = json::array();
      for (const auto& m : s.basis) {
        auto t = express_as_adjoint_right(a, GradedLinearMap{d, m});
        vecs.push_back(t ? vector_to_json(*t) : json(nullptr));
      }
      w["inner_decomposition"] = vecs;
    }
    out.push_back(w);
  }
  if (!human) emit(out.size() == 1 ? out[0] : json(out));
  return 0;
}

int run_complete(const std::string& ref, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const CompletenessCertificate cert = is_complete(a);
  if (human) {
    std::cout << "algebra: " << a.name << "\n";
    std::cout << "center_dim: " << cert.center_dim << "\n";
    std::cout << "derivation_dims: [" << cert.derivation_dims[0] << ", "
              << cert.derivation_dims[1] << "]\n";
    std::cout << "inner_dims: [" << cert.inner_dims[0] << ", " << cert.inner_dims[1] << "]\n";
    std::cout << "complete: " << (cert.complete ? "yes" : "no") << "\n";
  } else {
    emit(certificate_to_json(cert));
  }
  return 0;
}

int run_biderivations(const std::string& ref, unsigned degree, const std::string& definition,
                      bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const BiderVariant v = definition == "yuan-tang" ? BiderVariant::YuanTang : BiderVariant::New;
  const BilinearSolutionSpace s = solve_biderivations(a, degree, v);
  if (human)
    print_bilinear_space(s);
  else
    emit(bilinear_space_to_json(s));
  return 0;
}

int run_supercommuting(const std::string& ref, const std::string& definition, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const LinearSolutionSpace s =
      definition == "fan-dai" ? solve_supercommuting_fan_dai(a) : solve_supercommuting(a);
  if (human)
    print_linear_space(s);
  else
    emit(linear_space_to_json(s));
  return 0;
}

int run_phi_psi(const std::string& ref, const std::string& bider_ref, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const GradedBilinearMap b = resolve_bilinear(bider_ref, a);
  const PhiPsiPair pp = extract_phi_psi(a, b);
  if (human) {
    std::cout << "algebra: " << a.name << "\ndegree: " << b.degree << "\nphi:\n";
    print_matrix(std::cout, pp.phi.matrix, "  ");
    std::cout << "psi:\n";
    print_matrix(std::cout, pp.psi.matrix, "  ");
  } else {
    json j;
    j["algebra"] = a.name;
    j["degree"] = b.degree;
    j["phi"] = matrix_to_json(pp.phi.matrix);
    j["psi"] = matrix_to_json(pp.psi.matrix);
    emit(j);
  }
  return 0;
}

int run_deform(const std::string& ref, const std::string& bider_ref,
               const std::vector<std::string>& lambdas, bool human) {
  const SuperAlgebra a = resolve_algebra(ref);
  const GradedBilinearMap b = resolve_bilinear(bider_ref, a);
  json out = json::array();
  for (const auto& text : lambdas) {
    const DeformationResult r = deform(a, b, parse_rational(text));
    if (human)
      std::cout << "lambda = " << to_string(r.lambda) << ": grading "
                << (r.grading_ok ? "ok" : "FAIL") << ", skew " << (r.skew_ok ? "ok" : "FAIL")
                << ", jacobi " << (r.jacobi_ok ? "ok" : "FAIL")
                << (r.is_lie() ? " -> Lie superalgebra" : " -> not a Lie superalgebra") << "\n";
    else
      out.push_back(deformation_to_json(r));
  }
  if (!human) emit(out);
  return 0;
}

int run_catalog_list(bool human) {
  if (human) {
    for (const auto& e : catalog_entries()) std::cout << e.id << "  " << e.description << "\n";
    return 0;
  }
  json out = json::array();
  for (const auto& e : catalog_entries())
    out.push_back({{"id", e.id}, {"description", e.description}});
  emit(out);
  return 0;
}

int run_catalog_emit(const std::string& id) {
  auto a = catalog_lookup(id);
  if (!a) throw IoError("unknown catalog id \"" + id + "\"");
  emit(algebra_to_json(*a));
  return 0;
}

int run_verify_paper(bool as_json) {
  if (as_json) {
    const verify::VerificationReport rep = verify::run_all_claims(nullptr);
    std::cout << verify::report_to_json(rep).dump(2) << "\n";
    return rep.all_pass() ? 0 : 1;
  }
  const verify::VerificationReport rep = verify::run_all_claims(&std::cout);
  std::cout << "summary: " << rep.passed() << " passed, " << rep.failed() << " failed, "
            << rep.checks.size() << " total\n";
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation kernel for finite-dimensional Lie superalgebras"};
  app.require_subcommand(1);
  app.fallthrough();

  bool human = false;
  app.add_flag("--human", human, "render plain-text tables instead of JSON");

  const auto rational_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          parse_rational(s);
          return {};
        } catch (const std::exception& e) {
          return std::string(e.what());
        }
      },
      "RATIONAL");

  auto* check = app.add_subcommand("check", "verify the super-skew and Jacobi axioms");
  std::string check_alg;
  check->add_option("--algebra", check_alg, "algebra file or catalog:<id>")->required();

  auto* center_cmd = app.add_subcommand("center", "canonical basis of the (super)center");
  std::string center_alg;
  center_cmd->add_option("--algebra", center_alg, "algebra file or catalog:<id>")->required();

  auto* der = app.add_subcommand("derivations", "solve the superderivation equations");
  std::string der_alg, der_degree = "both";
  der->add_option("--algebra", der_alg, "algebra file or catalog:<id>")->required();
  der->add_option("--degree", der_degree, "map degree: 0, 1 or both")
      ->check(CLI::IsMember({"0", "1", "both"}));

  auto* t2 = app.add_subcommand("type2", "solve the type-2 map equations");
  std::string t2_alg, t2_degree = "both";
  bool t2_inner = false;
  t2->add_option("--algebra", t2_alg, "algebra file or catalog:<id>")->required();
  t2->add_option("--degree", t2_degree, "map degree: 0, 1 or both")
      ->check(CLI::IsMember({"0", "1", "both"}));
  t2->add_flag("--inner", t2_inner,
               "also express each basis map as a right adjoint (complete algebras only)");

  auto* comp = app.add_subcommand("complete", "compute the completeness certificate");
  std::string comp_alg;
  comp->add_option("--algebra", comp_alg, "algebra file or catalog:<id>")->required();

  auto* bid = app.add_subcommand("biderivations", "solve the superbiderivation equations");
  std::string bid_alg, bid_def = "new";
  unsigned bid_degree = 0;
  bid->add_option("--algebra", bid_alg, "algebra file or catalog:<id>")->required();
  bid->add_option("--degree", bid_degree, "map degree: 0 or 1")
      ->required()
      ->check(CLI::Range(0u, 1u));
  bid->add_option("--definition", bid_def, "defining sign convention")
      ->check(CLI::IsMember({"new", "yuan-tang"}));

  auto* sc = app.add_subcommand("supercommuting", "solve the supercommuting-map equations");
  std::string sc_alg, sc_def = "new";
  sc->add_option("--algebra", sc_alg, "algebra file or catalog:<id>")->required();
  sc->add_option("--definition", sc_def, "defining condition")
      ->check(CLI::IsMember({"new", "fan-dai"}));

  auto* pp = app.add_subcommand("phi-psi", "factor a biderivation through phi/psi adjoints");
  std::string pp_alg, pp_bider = "bracket";
  pp->add_option("--algebra", pp_alg, "algebra file or catalog:<id>")->required();
  pp->add_option("--bider", pp_bider, "bilinear-map file or the literal \"bracket\"");

  auto* def = app.add_subcommand("deform", "first-order deformations of the bracket");
  std::string def_alg, def_bider;
  std::vector<std::string> def_lambdas;
  def->add_option("--algebra", def_alg, "algebra file or catalog:<id>")->required();
  def->add_option("--bider", def_bider, "bilinear-map file or the literal \"bracket\"")
      ->required();
  def->add_option("--lambda", def_lambdas, "deformation scalar p/q (repeatable)")
      ->required()
      ->check(rational_check);

  auto* cat = app.add_subcommand("catalog", "bundled algebra catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list the catalog id patterns");
  auto* cat_emit = cat->add_subcommand("emit", "print a catalog algebra as JSON");
  std::string cat_id;
  cat_emit->add_option("id", cat_id, "catalog id, e.g. der_hs3")->required();

  auto* vp = app.add_subcommand("verify-paper", "replay every desk-scale claim");
  bool vp_json = false;
  vp->add_flag("--json", vp_json, "print the machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_alg, human);
    if (*center_cmd) return run_center(center_alg, human);
    if (*der) return run_derivations(der_alg, der_degree, human);
    if (*t2) return run_type2(t2_alg, t2_degree, t2_inner, human);
    if (*comp) return run_complete(comp_alg, human);
    if (*bid) return run_biderivations(bid_alg, bid_degree, bid_def, human);
    if (*sc) return run_supercommuting(sc_alg, sc_def, human);
    if (*pp) return run_phi_psi(pp_alg, pp_bider, human);
    if (*def) return run_deform(def_alg, def_bider, def_lambdas, human);
    if (*cat_list) return run_catalog_list(human);
    if (*cat_emit) return run_catalog_emit(cat_id);
    if (*vp) return run_verify_paper(vp_json);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
