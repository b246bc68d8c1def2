// Copyright 2026 The convmacw Authors
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

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "convmacw/adjacency.hpp"
#include "convmacw/duality.hpp"
#include "convmacw/poly_matrix.hpp"

namespace convmacw {

using Json = nlohmann::json;

/// Parses "1+z+z^3", "2 z^2 + 1", "[1,1]z + [0,1]" and "0". Coefficients are
/// integers below p or, for extension fields, digit lists "[d0,...]"
/// (constant digit first). Throws ParseError with a 1-based column.
ZPoly parse_polynomial(const std::string& text, const Field& field);

struct CodeDocument {
  FieldSpec field;
  PolyMatrix generator;
  std::optional<std::string> label;
  std::optional<PolyMatrix> dual_generator;
};

/// {"field": {"p": 2, "s": 1, "modulus": [...]}, "generator": [["1+z", ...], ...],
///  "label": "...", "dual_generator": [[...]]}. Throws ParseError.
CodeDocument parse_code_document(const std::string& json_text);
CodeDocument load_code_document(const std::string& path);

Json field_to_json(const FieldSpec& spec);
Json generator_to_json(const PolyMatrix& g);
Json document_to_json(const CodeDocument& doc);

Json mat_to_json(const Mat& m);
/// Nested integer lists, e.g. "[[1,1],[1,2]]". Throws ParseError.
Mat parse_matrix(const std::string& text, const Field& field);
Json subspace_to_json(const Subspace& s);
Json profile_to_json(const CodeProfile& p);
Json adjacency_to_json(const AdjMatrix& m);
Json report_to_json(const DualityReport& r, bool with_timings = true);

}  // namespace convmacw
