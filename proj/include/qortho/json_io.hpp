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

#pragma once

// JSON encodings. A complex scalar is [re, im]; a matrix is an array of rows;
// a vector is an array of scalars.
//
//   AlgebraSpec: {"n": int, "kind": "span"|"generators"|"blocks"|"masa"|"conjugated",
//                 plus exactly one payload: "matrices" (span, generators),
//                 "blocks" (blocks), "vectors" (masa), "unitary" + "inner" (conjugated)}
//   BasisFamily: {"n": int, "bases": [[vector, ...], ...]}
//
// Unknown or irrelevant fields are rejected with InputError.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qortho/algebra.hpp"
#include "qortho/mub.hpp"
#include "qortho/paperlab.hpp"
#include "qortho/privacy.hpp"

namespace qortho::json_io {

using json = nlohmann::json;

json to_json(Complex z);
json to_json(const CMatrix& m);
json to_json(const CVector& v);
json to_json(const Eigen::MatrixXd& m);

Complex complex_from_json(const json& j);
CMatrix matrix_from_json(const json& j);
CVector vector_from_json(const json& j);

AlgebraSpec spec_from_json(const json& j);
json to_json(const AlgebraSpec& spec);

BasisFamily family_from_json(const json& j);
json to_json(const BasisFamily& family);

json to_json(const OrthogonalityReport& r);
json to_json(const ValidationReport& r);
json to_json(const TrialReport& r);
json to_json(const ExampleEvaluation& e);

/// Reads and parses a file; missing files and syntax errors become InputError.
json read_file(const std::filesystem::path& path);

/// Pretty-printed, newline-terminated.
std::string dump(const json& j);

}  // namespace qortho::json_io
