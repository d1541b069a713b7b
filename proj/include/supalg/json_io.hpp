#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "supalg/biderivations.hpp"
#include "supalg/deformation.hpp"
#include "supalg/operator_spaces.hpp"

namespace supalg {

using nlohmann::json;

inline std::string load_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open \"" + path + "\" for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure on \"" + path + "\"");
  return ss.str();
}

inline void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw IoError("write failure on \"" + path + "\"");
}

/// Parses JSON text; syntax errors carry a 1-based line/column position.
inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte > 0 ? e.byte - 1 : 0;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(std::string("JSON syntax error: ") + e.what(), line, col);
  }
}

namespace detail {

inline void require_object_keys(const json& j, const std::string& what,
                                const std::set<std::string>& required,
                                const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw ValidationError(what + " must be a JSON object");
  for (const auto& k : required)
    if (!j.contains(k)) throw ValidationError(what + " is missing key \"" + k + "\"");
  for (const auto& [k, v] : j.items())
    if (!required.count(k) && !optional.count(k))
      throw ValidationError(what + " has unexpected key \"" + k + "\"");
}

inline std::size_t as_index(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw ValidationError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

// One [i, j, k, "p/q"] coefficient row.
inline std::pair<CoeffKey, Rational> parse_coeff_row(const json& row, const std::string& what) {
  if (!row.is_array() || row.size() != 4)
    throw ValidationError(what + " entries must be [i, j, k, value] quadruples");
  CoeffKey key{as_index(row[0], what + " index"), as_index(row[1], what + " index"),
               as_index(row[2], what + " index")};
  if (!row[3].is_string()) throw ValidationError(what + " values must be rational strings");
  Rational v = parse_rational(row[3].get<std::string>());
  if (v == 0) throw ValidationError(what + " stores an explicit zero coefficient");
  return {key, std::move(v)};
}

inline json coeff_rows(const CoeffTable& coeffs) {
  json rows = json::array();
  for (const auto& [key, v] : coeffs) rows.push_back(json::array({key[0], key[1], key[2], to_string(v)}));
  return rows;
}

}  // namespace detail

inline json algebra_to_json(const SuperAlgebra& a) {
  json j;
  j["name"] = a.name;
  j["dim_even"] = a.space.dim_even;
  j["dim_odd"] = a.space.dim_odd;
  json labels = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.space.label(i));
  j["labels"] = labels;
  j["brackets"] = detail::coeff_rows(a.sc);
  return j;
}

inline SuperAlgebra algebra_from_json(const json& j) {
  detail::require_object_keys(j, "algebra", {"name", "dim_even", "dim_odd", "brackets"},
                              {"labels"});
  if (!j["name"].is_string()) throw ValidationError("algebra name must be a string");
  SuperVectorSpace space;
  space.dim_even = detail::as_index(j["dim_even"], "dim_even");
  space.dim_odd = detail::as_index(j["dim_odd"], "dim_odd");
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || j["labels"].size() != space.dim())
      throw ValidationError("labels must list exactly one string per basis vector");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ValidationError("labels must be strings");
      space.basis_labels.push_back(l.get<std::string>());
    }
  }
  if (!j["brackets"].is_array()) throw ValidationError("brackets must be an array");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> entries;
  CoeffKey prev{};
  bool first = true;
  for (const auto& row : j["brackets"]) {
    auto [key, v] = detail::parse_coeff_row(row, "brackets");
    if (!first && !(prev < key))
      throw ValidationError("brackets must be sorted strictly by (i, j, k)");
    prev = key;
    first = false;
    entries.emplace_back(key[0], key[1], key[2], std::move(v));
  }
  return make_super_algebra(std::move(space), j["name"].get<std::string>(), entries);
}

inline SuperAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(parse_json_text(load_text_file(path)));
}

inline void save_algebra(const SuperAlgebra& a, const std::string& path) {
  save_text_file(path, algebra_to_json(a).dump(2) + "\n");
}

inline json bilinear_to_json(const GradedBilinearMap& b) {
  json j;
  j["degree"] = b.degree;
  j["coeffs"] = detail::coeff_rows(b.coeffs);
  return j;
}

inline GradedBilinearMap bilinear_from_json(const json& j, const SuperVectorSpace& space) {
  detail::require_object_keys(j, "bilinear map", {"degree", "coeffs"});
  const std::size_t degree = detail::as_index(j["degree"], "degree");
  if (degree > 1) throw ValidationError("degree must be 0 or 1");
  if (!j["coeffs"].is_array()) throw ValidationError("coeffs must be an array");
  CoeffTable coeffs;
  CoeffKey prev{};
  bool first = true;
  for (const auto& row : j["coeffs"]) {
    auto [key, v] = detail::parse_coeff_row(row, "coeffs");
    if (!first && !(prev < key)) throw ValidationError("coeffs must be sorted strictly by (i, j, k)");
    prev = key;
    first = false;
    coeffs.emplace(key, std::move(v));
  }
  return checked_bilinear(space, static_cast<unsigned>(degree), std::move(coeffs));
}

inline GradedBilinearMap load_bilinear(const std::string& path, const SuperVectorSpace& space) {
  return bilinear_from_json(parse_json_text(load_text_file(path)), space);
}

inline json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json vector_to_json(const RatVector& v) {
  json row = json::array();
  for (const auto& x : v) row.push_back(to_string(x));
  return row;
}

inline json linear_space_to_json(const LinearSolutionSpace& s) {
  json j;
  j["tag"] = tag_name(s.tag);
  if (s.degree)
    j["degree"] = *s.degree;
  else
    j["degree"] = "both";
  j["dimension"] = s.dimension();
  json basis = json::array();
  for (const auto& m : s.basis) basis.push_back(matrix_to_json(m));
  j["basis"] = basis;
  return j;
}

inline json bilinear_space_to_json(const BilinearSolutionSpace& s) {
  json j;
  j["tag"] = tag_name(s.tag);
  j["degree"] = s.degree;
  j["dimension"] = s.dimension();
  json basis = json::array();
  for (const auto& b : s.basis) basis.push_back(bilinear_to_json(b));
  j["basis"] = basis;
  return j;
}

inline json certificate_to_json(const CompletenessCertificate& c) {
  json j;
  j["center_dim"] = c.center_dim;
  j["derivation_dims"] = json::array({c.derivation_dims[0], c.derivation_dims[1]});
  j["inner_dims"] = json::array({c.inner_dims[0], c.inner_dims[1]});
  j["complete"] = c.complete;
  j["vacuous"] = c.vacuous;
  return j;
}

inline json witness_to_json(const std::optional<CoeffKey>& w) {
  if (!w) return nullptr;
  return json::array({(*w)[0], (*w)[1], (*w)[2]});
}

inline json deformation_to_json(const DeformationResult& r) {
  json j;
  j["lambda"] = to_string(r.lambda);
  j["grading_ok"] = r.grading_ok;
  j["skew_ok"] = r.skew_ok;
  j["jacobi_ok"] = r.jacobi_ok;
  j["is_lie"] = r.is_lie();
  j["skew_witness"] = witness_to_json(r.skew_witness);
  j["jacobi_witness"] = witness_to_json(r.jacobi_witness);
  return j;
}

}  // namespace supalg
