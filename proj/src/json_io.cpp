// Copyright 2026 The qortho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qortho/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "qortho/errors.hpp"

namespace qortho::json_io {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

void only_fields(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    require(allowed.contains(key), where + ": unexpected field \"" + key + "\"");
  }
}

std::size_t size_field(const json& j, const char* key, const std::string& where) {
  require(j.contains(key), where + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  require(v.is_number_integer() && v.get<long long>() > 0,
          where + ": \"" + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

json vectors_json(const CMatrix& columns) {
  json out = json::array();
  for (Eigen::Index k = 0; k < columns.cols(); ++k) out.push_back(to_json(CVector(columns.col(k))));
  return out;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const CVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const json& j) {
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "complex scalar must be a [re, im] pair of numbers");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  require(std::isfinite(z.real()) && std::isfinite(z.imag()), "complex scalar is not finite");
  return z;
}

CMatrix matrix_from_json(const json& j) {
  require(j.is_array() && !j.empty(), "matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  require(j[0].is_array() && !j[0].empty(), "matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    require(j[i].is_array() && j[i].size() == cols, "matrix rows have different lengths");
    for (std::size_t k = 0; k < cols; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = complex_from_json(j[i][k]);
    }
  }
  return m;
}

CVector vector_from_json(const json& j) {
  require(j.is_array() && !j.empty(), "vector must be a non-empty array of scalars");
  CVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

AlgebraSpec spec_from_json(const json& j) {
  require(j.is_object(), "algebra spec must be a JSON object");
  require(j.contains("kind") && j.at("kind").is_string(), "algebra spec: missing \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  const std::size_t n = size_field(j, "n", "algebra spec");
  const std::string where = "algebra spec (" + kind + ")";

  auto matrices = [&]() {
    require(j.contains("matrices") && j.at("matrices").is_array() && !j.at("matrices").empty(),
            where + ": \"matrices\" must be a non-empty array");
    std::vector<CMatrix> out;
    for (const auto& m : j.at("matrices")) out.push_back(matrix_from_json(m));
    return out;
  };

  if (kind == "span" || kind == "generators") {
    only_fields(j, {"n", "kind", "matrices"}, where);
    return kind == "span" ? AlgebraSpec::span(n, matrices())
                          : AlgebraSpec::generators(n, matrices());
  }
  if (kind == "blocks") {
    only_fields(j, {"n", "kind", "blocks"}, where);
    require(j.contains("blocks") && j.at("blocks").is_array(), where + ": missing \"blocks\"");
    std::vector<std::size_t> sizes;
    for (const auto& b : j.at("blocks")) {
      require(b.is_number_integer() && b.get<long long>() > 0,
              where + ": block sizes must be positive integers");
      sizes.push_back(b.get<std::size_t>());
    }
    return AlgebraSpec::blocks(n, std::move(sizes));
  }
  if (kind == "masa") {
    only_fields(j, {"n", "kind", "vectors"}, where);
    require(j.contains("vectors") && j.at("vectors").is_array(), where + ": missing \"vectors\"");
    std::vector<CVector> vs;
    for (const auto& v : j.at("vectors")) vs.push_back(vector_from_json(v));
    return AlgebraSpec::masa(n, std::move(vs));
  }
  if (kind == "conjugated") {
    only_fields(j, {"n", "kind", "unitary", "inner"}, where);
    require(j.contains("unitary") && j.contains("inner"),
            where + ": needs \"unitary\" and \"inner\"");
    AlgebraSpec inner = spec_from_json(j.at("inner"));
    require(inner.n == n, where + ": inner spec has a different n");
    return AlgebraSpec::conjugated(matrix_from_json(j.at("unitary")), std::move(inner));
  }
  throw InputError("algebra spec: unknown kind \"" + kind + "\"");
}

json to_json(const AlgebraSpec& s) {
  json j{{"n", s.n}, {"kind", s.kind_name()}};
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, spec::Span> || std::is_same_v<K, spec::Generators>) {
          json ms = json::array();
          for (const auto& m : k.matrices) ms.push_back(to_json(m));
          j["matrices"] = std::move(ms);
        } else if constexpr (std::is_same_v<K, spec::Blocks>) {
          j["blocks"] = k.sizes;
        } else if constexpr (std::is_same_v<K, spec::Masa>) {
          json vs = json::array();
          for (const auto& v : k.vectors) vs.push_back(to_json(v));
          j["vectors"] = std::move(vs);
        } else {
          j["unitary"] = to_json(k.unitary);
          j["inner"] = to_json(*k.inner);
        }
      },
      s.kind);
  return j;
}

BasisFamily family_from_json(const json& j) {
  require(j.is_object(), "basis family must be a JSON object");
  only_fields(j, {"n", "bases"}, "basis family");
  const std::size_t n = size_field(j, "n", "basis family");
  require(j.contains("bases") && j.at("bases").is_array(), "basis family: missing \"bases\"");
  BasisFamily family{n, {}};
  for (const auto& basis : j.at("bases")) {
    require(basis.is_array() && basis.size() == n,
            "basis family: each basis must list exactly n vectors");
    CMatrix cols(n, n);
    Eigen::Index k = 0;
    for (const auto& v : basis) {
      const CVector vv = vector_from_json(v);
      require(static_cast<std::size_t>(vv.size()) == n, "basis family: vector length is not n");
      cols.col(k++) = vv;
    }
    family.bases.push_back(std::move(cols));
  }
  return family;
}

json to_json(const BasisFamily& family) {
  json bases = json::array();
  for (const auto& b : family.bases) bases.push_back(vectors_json(b));
  return json{{"n", family.n}, {"bases", std::move(bases)}};
}

json to_json(const OrthogonalityReport& r) {
  return json{
      {"n", r.n},
      {"dim_a", r.dim_a},
      {"dim_b", r.dim_b},
      {"d_max", r.d_max},
      {"d_min", r.d_min},
      {"q_natural", r.q_natural},
      {"q_choi", r.q_choi},
      {"q_basis", r.q_basis},
      {"q", r.q},
      {"route_spread", r.route_spread},
      {"eps_a_privatizes_b", r.eps_a_privatizes_b},
      {"eps_b_privatizes_a", r.eps_b_privatizes_a},
      {"frobenius_sq_ab", r.frobenius_sq_ab},
      {"frobenius_residual", r.frobenius_residual},
      {"forward_bound", r.forward_bound},
      {"converse_bound", r.converse_bound},
      {"quasiorthogonal", r.quasiorthogonal},
      {"forward_bound_ok", r.forward_bound_ok},
      {"converse_bound_ok", r.converse_bound_ok},
      {"converse_ab_ok", r.converse_ab_ok},
      {"converse_ba_ok", r.converse_ba_ok},
      {"projection_identity_enforced", r.projection_identity_enforced},
      {"tol", r.tol},
  };
}

json to_json(const ValidationReport& r) {
  return json{
      {"n", r.n},
      {"dim", r.dim},
      {"orthonormality", r.orthonormality},
      {"unitality", r.unitality},
      {"star_closure", r.star_closure},
      {"multiplicative_closure", r.multiplicative_closure},
      {"hermiticity", r.hermiticity},
      {"standard_form", r.standard_form},
      {"tolerance", r.tolerance},
      {"passed", r.passed},
  };
}

json to_json(const TrialReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back(json{{"trial", v.trial},
                              {"seed", v.seed},
                              {"q", v.q},
                              {"eps_ab", v.eps_ab},
                              {"eps_ba", v.eps_ba},
                              {"forward_ok", v.forward_ok},
                              {"converse_ok", v.converse_ok}});
  }
  return json{
      {"n", r.n},
      {"seed", r.seed},
      {"count", r.count},
      {"dim_a", r.dim_a},
      {"dim_b", r.dim_b},
      {"q_min", r.q_min},
      {"q_max", r.q_max},
      {"q_mean", r.q_mean},
      {"eps_max", r.eps_max},
      {"max_route_spread", r.max_route_spread},
      {"max_frobenius_residual", r.max_frobenius_residual},
      {"forward_violations", r.forward_violations},
      {"converse_violations", r.converse_violations},
      {"violations", std::move(violations)},
  };
}

json to_json(const ExampleEvaluation& e) {
  return json{{"computed_q", e.report.q},
              {"expected_q", e.expected_q},
              {"abs_diff", e.abs_diff},
              {"rel_diff", e.rel_diff},
              {"report", to_json(e.report)}};
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qortho::json_io
