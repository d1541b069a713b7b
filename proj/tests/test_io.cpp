#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "supalg/catalog.hpp"
#include "supalg/json_io.hpp"
#include "supalg/operator_spaces.hpp"

using namespace supalg;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "supalg_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("algebra serialization has a fixed shape") {
  const json j = algebra_to_json(example_2dim());
  json expected;
  expected["name"] = "example_2dim";
  expected["dim_even"] = 1;
  expected["dim_odd"] = 1;
  expected["labels"] = json::array({"x", "v"});
  expected["brackets"] = json::array({json::array({1, 1, 0, "1"})});
  REQUIRE(j == expected);
  REQUIRE(j.dump(2) == expected.dump(2));
}

TEST_CASE("algebra file round trip") {
  const fs::path path = temp_file("der_hs3.json");
  const SuperAlgebra a = der_heisenberg(3);
  save_algebra(a, path.string());
  const SuperAlgebra b = load_algebra(path.string());
  REQUIRE(a == b);

  // Serialization is byte-stable.
  save_algebra(b, path.string());
  const std::string once = load_text_file(path.string());
  save_algebra(load_algebra(path.string()), path.string());
  REQUIRE(load_text_file(path.string()) == once);
  REQUIRE(once.back() == '\n');
}

TEST_CASE("missing files raise IoError") {
  REQUIRE_THROWS_AS(load_algebra("/nonexistent/nowhere.json"), IoError);
  REQUIRE_THROWS_AS(load_text_file("/nonexistent/nowhere.json"), IoError);
}

TEST_CASE("json syntax errors carry line and column") {
  try {
    parse_json_text("{\n  \"a\": ]\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
    REQUIRE(e.column() > 0);
    REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("algebra loader is strict") {
  const json good = algebra_to_json(heisenberg(2));
  REQUIRE(algebra_from_json(good) == heisenberg(2));

  json missing = good;
  missing.erase("dim_odd");
  REQUIRE_THROWS_AS(algebra_from_json(missing), ValidationError);

  json extra = good;
  extra["comment"] = "hi";
  REQUIRE_THROWS_AS(algebra_from_json(extra), ValidationError);

  json unsorted = good;
  std::swap(unsorted["brackets"][0], unsorted["brackets"][1]);
  REQUIRE_THROWS_AS(algebra_from_json(unsorted), ValidationError);

  json duplicate = good;
  duplicate["brackets"].push_back(duplicate["brackets"][1]);
  REQUIRE_THROWS_AS(algebra_from_json(duplicate), ValidationError);

  json zero = good;
  zero["brackets"][0][3] = "0";
  REQUIRE_THROWS_AS(algebra_from_json(zero), ValidationError);

  json unreduced = good;
  unreduced["brackets"][0][3] = "2/4";
  REQUIRE_THROWS_AS(algebra_from_json(unreduced), ParseError);

  json bad_labels = good;
  bad_labels["labels"] = json::array({"c"});
  REQUIRE_THROWS_AS(algebra_from_json(bad_labels), ValidationError);

  json no_labels = good;
  no_labels.erase("labels");
  REQUIRE(algebra_from_json(no_labels).space.basis_labels.empty());

  json off_grading = good;
  off_grading["brackets"] = json::array({json::array({1, 1, 1, "1"})});
  REQUIRE_THROWS_AS(algebra_from_json(off_grading), ValidationError);
}

TEST_CASE("bilinear map round trip and validation") {
  const SuperAlgebra a = example_2dim();
  const GradedBilinearMap b{1, {{{0, 1, 0}, 2}, {{1, 0, 0}, 2}, {{1, 1, 1}, 1}}};
  const json j = bilinear_to_json(b);
  REQUIRE(bilinear_from_json(j, a.space) == b);

  const fs::path path = temp_file("bider.json");
  save_text_file(path.string(), j.dump(2) + "\n");
  REQUIRE(load_bilinear(path.string(), a.space) == b);

  json bad_degree = j;
  bad_degree["degree"] = 2;
  REQUIRE_THROWS_AS(bilinear_from_json(bad_degree, a.space), ValidationError);

  json off_parity = j;
  off_parity["degree"] = 0;  // the same keys are inadmissible at degree 0
  REQUIRE_THROWS_AS(bilinear_from_json(off_parity, a.space), ValidationError);

  json not_sorted = j;
  std::swap(not_sorted["coeffs"][0], not_sorted["coeffs"][1]);
  REQUIRE_THROWS_AS(bilinear_from_json(not_sorted, a.space), ValidationError);
}

TEST_CASE("matrix and vector serialization") {
  RatMatrix m(2, 2);
  m.at(0, 1) = make_rational(-1, 2);
  REQUIRE(matrix_to_json(m) ==
          json::array({json::array({"0", "-1/2"}), json::array({"0", "0"})}));
  REQUIRE(vector_to_json(RatVector{1, make_rational(2, 3)}) == json::array({"1", "2/3"}));
}

TEST_CASE("solution space serialization has exactly four keys") {
  const LinearSolutionSpace s = solve_type1(example_2dim(), 0);
  const json j = linear_space_to_json(s);
  REQUIRE(j.size() == 4);
  REQUIRE(j.contains("tag"));
  REQUIRE(j.contains("degree"));
  REQUIRE(j.contains("dimension"));
  REQUIRE(j.contains("basis"));
  REQUIRE(j["tag"] == "type1");
  REQUIRE(j["degree"] == 0);
  REQUIRE(j["dimension"] == j["basis"].size());

  const BilinearSolutionSpace bs = solve_biderivations(example_2dim(), 1, BiderVariant::New);
  const json bj = bilinear_space_to_json(bs);
  REQUIRE(bj.size() == 4);
  REQUIRE(bj["tag"] == "bider_new");
  REQUIRE(bj["degree"] == 1);
  REQUIRE(bj["dimension"] == 1);
}

TEST_CASE("certificate and deformation serialization") {
  const json cert = certificate_to_json(is_complete(der_heisenberg(3)));
  REQUIRE(cert["complete"] == true);
  REQUIRE(cert["vacuous"] == false);
  REQUIRE(cert["center_dim"] == 0);
  REQUIRE(cert["derivation_dims"] == json::array({4, 3}));
  REQUIRE(cert["inner_dims"] == json::array({4, 3}));

  const SuperAlgebra a = der_heisenberg(3);
  const json d = deformation_to_json(deform(a, a.bracket_tensor(), make_rational(1, 2)));
  REQUIRE(d["lambda"] == "1/2");
  REQUIRE(d["grading_ok"] == true);
  REQUIRE(d["skew_ok"] == true);
  REQUIRE(d["jacobi_ok"] == true);
  REQUIRE(d["is_lie"] == true);
  REQUIRE(d["skew_witness"].is_null());
  REQUIRE(d["jacobi_witness"].is_null());
}
