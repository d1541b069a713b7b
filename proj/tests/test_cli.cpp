#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "proc.hpp"
#include "schema_check.hpp"
#include "supalg/catalog.hpp"
#include "supalg/json_io.hpp"

using namespace supalg;
namespace fs = std::filesystem;

namespace {

std::string bin() { return SUPALG_BIN; }

ProcResult run_cli(const std::string& args, bool quiet_stderr = true) {
  return run_command(bin() + " " + args + (quiet_stderr ? " 2>/dev/null" : ""));
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "supalg_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

// Grading-valid but not super-skew: [x1, x2] = c with no mirror.
fs::path broken_algebra_file() {
  const fs::path p = temp_file("broken.json");
  const SuperAlgebra bad = make_super_algebra({1, 2, {}}, "broken", {{1, 2, 0, 1}});
  save_algebra(bad, p.string());
  return p;
}

}  // namespace

TEST_CASE("check reports axiom results and exit status") {
  const ProcResult ok = run_cli("check --algebra catalog:der_hs3");
  REQUIRE(ok.exit_code == 0);
  const json j = parse_json_text(ok.out);
  REQUIRE(j["algebra"] == "der_hs3");
  REQUIRE(j["pass"] == true);
  REQUIRE(j["super_skew"]["pass"] == true);
  REQUIRE(j["super_skew"]["witness"].is_null());
  REQUIRE(j["jacobi"]["pass"] == true);

  const ProcResult bad = run_cli("check --algebra " + broken_algebra_file().string());
  REQUIRE(bad.exit_code == 1);
  const json bj = parse_json_text(bad.out);
  REQUIRE(bj["pass"] == false);
  REQUIRE(bj["super_skew"]["pass"] == false);
  REQUIRE(bj["super_skew"]["witness"] == json::array({1, 2, 0}));
}

TEST_CASE("catalog ids work with and without the uri prefix") {
  REQUIRE(run_cli("check --algebra catalog:sl12").exit_code == 0);
  REQUIRE(run_cli("check --algebra sl12").exit_code == 0);
  REQUIRE(run_cli("check --algebra catalog:nope").exit_code == 3);
}

TEST_CASE("output is byte-stable across runs") {
  const std::string cmd = "derivations --algebra catalog:hs3 --degree 0";
  const ProcResult a = run_cli(cmd), b = run_cli(cmd);
  REQUIRE(a.exit_code == 0);
  REQUIRE_FALSE(a.out.empty());
  REQUIRE(a.out == b.out);
  REQUIRE(a.out.back() == '\n');
}

TEST_CASE("derivations subcommand") {
  const ProcResult r = run_cli("derivations --algebra catalog:hs2 --degree 0");
  REQUIRE(r.exit_code == 0);
  const json j = parse_json_text(r.out);
  REQUIRE(j["tag"] == "type1");
  REQUIRE(j["degree"] == 0);
  REQUIRE(j["dimension"] == 2);
  REQUIRE(j["basis"].size() == 2);
  REQUIRE(j.size() == 4);

  const ProcResult both = run_cli("derivations --algebra catalog:hs2");
  const json bj = parse_json_text(both.out);
  REQUIRE(bj.is_array());
  REQUIRE(bj.size() == 2);
  REQUIRE(bj[0]["degree"] == 0);
  REQUIRE(bj[1]["degree"] == 1);
  REQUIRE(bj[1]["dimension"] == 2);

  // Solvers refuse non-Lie input files.
  REQUIRE(run_cli("derivations --algebra " + broken_algebra_file().string()).exit_code == 3);
}

TEST_CASE("type2 subcommand with inner decomposition") {
  const ProcResult r = run_cli("type2 --algebra catalog:der_hs3 --degree 0 --inner");
  REQUIRE(r.exit_code == 0);
  const json j = parse_json_text(r.out);
  REQUIRE(j["space"]["tag"] == "type2");
  REQUIRE(j["space"]["dimension"] == 4);
  REQUIRE(j["inner_decomposition"].is_array());
  REQUIRE(j["inner_decomposition"].size() == 4);
  for (const auto& v : j["inner_decomposition"]) {
    REQUIRE(v.is_array());
    REQUIRE(v.size() == 7);
  }

  const ProcResult nc = run_cli("type2 --algebra catalog:hs3 --degree 0 --inner");
  REQUIRE(parse_json_text(nc.out)["inner_decomposition"] == "not attempted");

  const ProcResult plain = run_cli("type2 --algebra catalog:hs3 --degree 1");
  const json pj = parse_json_text(plain.out);
  REQUIRE(pj["tag"] == "type2");
  REQUIRE(pj["dimension"] == 3);
}

TEST_CASE("center and complete subcommands") {
  const ProcResult c = run_cli("center --algebra catalog:hs3");
  REQUIRE(c.exit_code == 0);
  const json cj = parse_json_text(c.out);
  REQUIRE(cj["tag"] == "center");
  REQUIRE(cj["degree"] == "both");
  REQUIRE(cj["dimension"] == 1);
  REQUIRE(cj["basis"] == json::array({json::array({"1", "0", "0", "0"})}));
  REQUIRE(cj.size() == 4);

  const ProcResult yes = run_cli("complete --algebra catalog:der_hs3");
  REQUIRE(yes.exit_code == 0);
  REQUIRE(parse_json_text(yes.out)["complete"] == true);

  const ProcResult no = run_cli("complete --algebra catalog:hs3");
  REQUIRE(no.exit_code == 0);  // a query, not a verification
  const json nj = parse_json_text(no.out);
  REQUIRE(nj["complete"] == false);
  REQUIRE(nj["center_dim"] == 1);
}

TEST_CASE("biderivations subcommand reproduces the closed forms") {
  const ProcResult nw =
      run_cli("biderivations --algebra catalog:example_2dim --degree 1 --definition new");
  REQUIRE(nw.exit_code == 0);
  const json j = parse_json_text(nw.out);
  REQUIRE(j["tag"] == "bider_new");
  REQUIRE(j["degree"] == 1);
  REQUIRE(j["dimension"] == 1);
  REQUIRE(j["basis"][0]["coeffs"] ==
          json::array({json::array({0, 1, 0, "2"}), json::array({1, 0, 0, "2"}),
                       json::array({1, 1, 1, "1"})}));

  const ProcResult yt =
      run_cli("biderivations --algebra catalog:example_2dim --degree 1 --definition yuan-tang");
  const json y = parse_json_text(yt.out);
  REQUIRE(y["tag"] == "bider_yuan_tang");
  REQUIRE(y["basis"][0]["coeffs"][0] == json::array({0, 1, 0, "-2"}));

  REQUIRE(run_cli("biderivations --algebra catalog:example_2dim --degree 1 --definition bogus")
              .exit_code == 2);
  REQUIRE(run_cli("biderivations --algebra catalog:example_2dim --definition new").exit_code ==
          2);  // --degree is required
}

TEST_CASE("supercommuting subcommand") {
  const ProcResult r = run_cli("supercommuting --algebra catalog:der_hs3");
  REQUIRE(r.exit_code == 0);
  const json j = parse_json_text(r.out);
  REQUIRE(j["tag"] == "supercomm_new");
  REQUIRE(j["degree"] == "both");
  REQUIRE(j["dimension"] == 1);
  REQUIRE(j["basis"][0] == matrix_to_json(RatMatrix::identity(7)));

  const ProcResult fd = run_cli("supercommuting --algebra catalog:sl12 --definition fan-dai");
  REQUIRE(fd.exit_code == 0);
  REQUIRE(parse_json_text(fd.out)["tag"] == "supercomm_fan_dai");
}

TEST_CASE("phi-psi subcommand") {
  const ProcResult r = run_cli("phi-psi --algebra catalog:der_hs3");
  REQUIRE(r.exit_code == 0);
  const json j = parse_json_text(r.out);
  REQUIRE(j["degree"] == 0);
  REQUIRE(j["phi"] == matrix_to_json(RatMatrix::identity(7)));
  REQUIRE(j["psi"] == matrix_to_json(RatMatrix::identity(7)));

  // Incomplete algebras are rejected as input errors.
  REQUIRE(run_cli("phi-psi --algebra catalog:hs3").exit_code == 3);
}

TEST_CASE("deform subcommand sweeps lambda values") {
  const ProcResult r = run_cli(
      "deform --algebra catalog:der_hs3 --bider bracket --lambda 1 --lambda -1 --lambda 1/2");
  REQUIRE(r.exit_code == 0);
  const json j = parse_json_text(r.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  REQUIRE(j[0]["lambda"] == "1");
  REQUIRE(j[1]["lambda"] == "-1");
  REQUIRE(j[2]["lambda"] == "1/2");
  for (const auto& entry : j) {
    REQUIRE(entry["is_lie"] == true);
    REQUIRE(entry["jacobi_witness"].is_null());
  }

  // A perturbation loaded from a file.
  const SuperAlgebra a = der_heisenberg(2);
  const fs::path bp = temp_file("bracket2.json");
  save_text_file(bp.string(), bilinear_to_json(a.bracket_tensor()).dump(2) + "\n");
  const ProcResult f =
      run_cli("deform --algebra catalog:der_hs2 --bider " + bp.string() + " --lambda 3/7");
  REQUIRE(f.exit_code == 0);
  REQUIRE(parse_json_text(f.out)[0]["is_lie"] == true);

  // Non-canonical rationals are usage errors.
  REQUIRE(run_cli("deform --algebra catalog:der_hs3 --bider bracket --lambda 2/4").exit_code ==
          2);
  // Missing --lambda is a usage error.
  REQUIRE(run_cli("deform --algebra catalog:der_hs3 --bider bracket").exit_code == 2);
}

TEST_CASE("catalog subcommands") {
  const ProcResult list = run_cli("catalog list");
  REQUIRE(list.exit_code == 0);
  const json lj = parse_json_text(list.out);
  REQUIRE(lj.is_array());
  REQUIRE(lj.size() == 5);
  REQUIRE(lj[0]["id"] == "example_2dim");

  const ProcResult emit = run_cli("catalog emit der_hs2");
  REQUIRE(emit.exit_code == 0);
  const SuperAlgebra a = algebra_from_json(parse_json_text(emit.out));
  REQUIRE(a == der_heisenberg(2));

  REQUIRE(run_cli("catalog emit nope").exit_code == 3);
  REQUIRE(run_cli("catalog").exit_code == 2);
}

TEST_CASE("usage and input errors") {
  REQUIRE(run_cli("").exit_code == 2);
  REQUIRE(run_cli("frobnicate").exit_code == 2);
  REQUIRE(run_cli("check").exit_code == 2);  // --algebra required
  REQUIRE(run_cli("derivations --algebra catalog:hs2 --degree 5").exit_code == 2);
  REQUIRE(run_cli("check --algebra /nonexistent/missing.json").exit_code == 3);

  const fs::path garbled = temp_file("garbled.json");
  save_text_file(garbled.string(), "{ not json\n");
  REQUIRE(run_cli("check --algebra " + garbled.string()).exit_code == 3);

  const fs::path invalid = temp_file("invalid.json");
  save_text_file(invalid.string(), "{\"name\": \"x\"}\n");
  REQUIRE(run_cli("check --algebra " + invalid.string()).exit_code == 3);
}

TEST_CASE("human rendering") {
  const ProcResult r = run_cli("check --algebra catalog:hs2 --human");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("super-skew: pass") != std::string::npos);

  const ProcResult d = run_cli("derivations --algebra catalog:hs2 --degree 0 --human");
  REQUIRE(d.exit_code == 0);
  REQUIRE(d.out.find("dimension: 2") != std::string::npos);

  const ProcResult c = run_cli("complete --algebra catalog:der_hs3 --human");
  REQUIRE(c.out.find("complete: yes") != std::string::npos);
}

TEST_CASE("verify-paper --json conforms to the shipped schema") {
  const json schema =
      parse_json_text(load_text_file(std::string(SUPALG_SCHEMA_DIR) + "/verify_report.schema.json"));

  const ProcResult r = run_cli("verify-paper --json");
  REQUIRE(r.exit_code == 0);
  const json report = parse_json_text(r.out);

  REQUIRE_FALSE(schema_violation(schema, report).has_value());
  REQUIRE(report["checks"].size() == 13);
  REQUIRE(report["summary"]["total"] == 13);
  REQUIRE(report["summary"]["pass"] == 13);
  REQUIRE(report["summary"]["fail"] == 0);
  for (const auto& c : report["checks"]) REQUIRE(c["status"] == "pass");

  // The checker itself distinguishes: a mutilated report must not validate.
  json bad = report;
  bad["checks"][0]["status"] = "maybe";
  REQUIRE(schema_violation(schema, bad).has_value());
  json missing = report;
  missing.erase("summary");
  REQUIRE(schema_violation(schema, missing).has_value());
  json extra = report;
  extra["color"] = "red";
  REQUIRE(schema_violation(schema, extra).has_value());
}
