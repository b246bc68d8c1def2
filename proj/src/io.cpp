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

#include "convmacw/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "convmacw/errors.hpp"

namespace convmacw {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const Field& field) : s_(text), f_(field) {}

  ZPoly run() {
    std::vector<Elem> coeffs;
    skip();
    if (at_end()) fail("empty polynomial");
    while (true) {
      const auto [c, power] = term();
      if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
      coeffs[power] = f_.add(coeffs[power], c);
      skip();
      if (at_end()) break;
      if (s_[i_] != '+') fail(std::string("expected '+' but found '") + s_[i_] + "'");
      ++i_;
      skip();
      if (at_end()) fail("expected a term after '+'");
    }
    return ZPoly(f_, std::move(coeffs));
  }

 private:
  bool at_end() const { return i_ >= s_.size(); }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("column " + std::to_string(i_ + 1) + ": " + what, i_ + 1);
  }

  unsigned long long number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a number");
    unsigned long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
      if (v > (1ull << 32)) fail("number too large");
      ++i_;
    }
    return v;
  }

  Elem coefficient() {
    const std::size_t start = i_;
    if (s_[i_] == '[') {
      ++i_;
      std::vector<std::uint32_t> digits;
      skip();
      while (true) {
        const std::size_t at = i_;
        const auto d = number();
        if (d >= f_.p()) {
          i_ = at;
          fail("digit " + std::to_string(d) + " is not below p = " + std::to_string(f_.p()));
        }
        digits.push_back(static_cast<std::uint32_t>(d));
        skip();
        if (at_end()) fail("unterminated digit list");
        if (s_[i_] == ']') {
          ++i_;
          break;
        }
        if (s_[i_] != ',') fail("expected ',' or ']' in digit list");
        ++i_;
        skip();
      }
      if (digits.size() > f_.s()) {
        i_ = start;
        fail("digit list longer than the extension degree " + std::to_string(f_.s()));
      }
      digits.resize(f_.s(), 0);
      return f_.from_digits(digits);
    }
    const auto v = number();
    if (v >= f_.p()) {
      i_ = start;
      fail("coefficient " + std::to_string(v) + " is not below p = " + std::to_string(f_.p()));
    }
    return static_cast<Elem>(v);
  }

  std::pair<Elem, std::size_t> term() {
    Elem c = 1;
    bool have_coeff = false;
    if (s_[i_] == '[' || std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      c = coefficient();
      have_coeff = true;
      skip();
      if (!at_end() && s_[i_] == '*') {
        ++i_;
        skip();
        if (at_end() || s_[i_] != 'z') fail("expected 'z' after '*'");
      }
    }
    if (!at_end() && s_[i_] == 'z') {
      ++i_;
      skip();
      std::size_t power = 1;
      if (!at_end() && s_[i_] == '^') {
        ++i_;
        skip();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an exponent after '^'");
        const auto e = number();
        if (e > 4096) fail("exponent too large");
        power = static_cast<std::size_t>(e);
      }
      return {c, power};
    }
    if (!have_coeff) {
      if (at_end()) fail("expected a coefficient or 'z'");
      fail(std::string("unexpected character '") + s_[i_] + "'");
    }
    return {c, 0};
  }

  const std::string& s_;
  const Field& f_;
  std::size_t i_ = 0;
};

FieldSpec parse_field(const Json& j) {
  if (!j.is_object()) throw ParseError("\"field\" must be an object");
  if (!j.contains("p") || !j["p"].is_number_unsigned()) throw ParseError("\"field.p\" must be a positive integer");
  const auto p = j["p"].get<std::uint32_t>();
  std::uint32_t s = 1;
  if (j.contains("s")) {
    if (!j["s"].is_number_unsigned()) throw ParseError("\"field.s\" must be a positive integer");
    s = j["s"].get<std::uint32_t>();
  }
  try {
    if (s == 1 && !j.contains("modulus")) return FieldSpec::prime(p);
    if (!j.contains("modulus")) throw ParseError("\"field.modulus\" is required when s > 1");
    const auto modulus = j["modulus"].get<std::vector<std::uint32_t>>();
    if (modulus.size() != s + 1) {
      throw ParseError("\"field.modulus\" must have s + 1 = " + std::to_string(s + 1) + " coefficients");
    }
    return FieldSpec::extension(p, modulus);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("\"field.modulus\": ") + e.what());
  } catch (const UsageError& e) {
    throw ParseError(std::string("field: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("field: ") + e.what());
  }
}

PolyMatrix parse_generator(const Json& j, const Field& f, const std::string& name) {
  if (!j.is_array() || j.empty()) throw ParseError("\"" + name + "\" must be a non-empty array of rows");
  const std::size_t k = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("\"" + name + "[0]\" must be a non-empty array");
  const std::size_t n = j[0].size();
  PolyMatrix g(f, k, n);
  for (std::size_t i = 0; i < k; ++i) {
    if (!j[i].is_array() || j[i].size() != n) {
      throw ParseError("\"" + name + "[" + std::to_string(i) + "]\" must have " + std::to_string(n) + " entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Json& cell = j[i][c];
      const std::string where = name + "[" + std::to_string(i) + "][" + std::to_string(c) + "]";
      std::string text;
      if (cell.is_string()) {
        text = cell.get<std::string>();
      } else if (cell.is_number_unsigned()) {
        text = std::to_string(cell.get<unsigned long long>());
      } else {
        throw ParseError(where + ": expected a polynomial string");
      }
      try {
        g.at(i, c) = parse_polynomial(text, f);
      } catch (const ParseError& e) {
        throw ParseError(where + " \"" + text + "\": " + e.what(), e.column());
      }
    }
  }
  return g;
}

}  // namespace

ZPoly parse_polynomial(const std::string& text, const Field& field) {
  return PolyParser(text, field).run();
}

CodeDocument parse_code_document(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("code document must be a JSON object");
  if (!j.contains("field")) throw ParseError("missing \"field\"");
  if (!j.contains("generator")) throw ParseError("missing \"generator\"");
  const FieldSpec spec = parse_field(j["field"]);
  const Field f = [&] {
    try {
      return Field(spec);
    } catch (const UsageError& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }();
  CodeDocument doc{spec, parse_generator(j["generator"], f, "generator"), std::nullopt, std::nullopt};
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
    doc.label = j["label"].get<std::string>();
  }
  if (j.contains("dual_generator")) {
    doc.dual_generator = parse_generator(j["dual_generator"], f, "dual_generator");
    if (doc.dual_generator->cols() != doc.generator.cols()) {
      throw ParseError("\"dual_generator\" has a different length than \"generator\"");
    }
  }
  return doc;
}

CodeDocument load_code_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_code_document(os.str());
}

Json field_to_json(const FieldSpec& spec) {
  Json j{{"p", spec.p}, {"s", spec.s}};
  if (spec.s > 1) j["modulus"] = spec.modulus;
  return j;
}

Json generator_to_json(const PolyMatrix& g) { return g.to_strings(); }

Json document_to_json(const CodeDocument& doc) {
  Json j{{"field", field_to_json(doc.field)}, {"generator", generator_to_json(doc.generator)}};
  if (doc.label) j["label"] = *doc.label;
  if (doc.dual_generator) j["dual_generator"] = generator_to_json(*doc.dual_generator);
  return j;
}

Json mat_to_json(const Mat& m) { return m.to_nested(); }

Mat parse_matrix(const std::string& text, const Field& field) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid matrix: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("matrix must be a list of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j[0].size();
  Mat m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_number_unsigned() || j[i][c].get<unsigned long long>() >= field.q()) {
        throw ParseError("matrix entry (" + std::to_string(i) + "," + std::to_string(c) +
                         ") is not a field element encoding");
      }
      m.at(i, c) = j[i][c].get<Elem>();
    }
  }
  return m;
}

Json subspace_to_json(const Subspace& s) {
  return Json{{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", s.basis().to_nested()}};
}

Json profile_to_json(const CodeProfile& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"delta", p.delta}, {"forney", p.forney}, {"r", p.r}};
}

Json adjacency_to_json(const AdjMatrix& m) {
  Json entries = Json::array();
  for (const auto& [key, w] : m.entries()) {
    entries.push_back(Json{{"row", key.first}, {"col", key.second}, {"we", w.coeffs()}});
  }
  return Json{{"delta", m.delta()}, {"q", m.q()},      {"n", m.n()},
              {"ordering", "lex-enc"}, {"entries", entries}};
}

Json report_to_json(const DualityReport& r, bool with_timings) {
  Json j{{"profile", profile_to_json(r.profile)},
         {"dual_profile", profile_to_json(r.dual_profile)},
         {"r_hat", r.r_hat},
         {"theorem_used", r.theorem_used},
         {"verdict", r.verdict},
         {"entry_mismatch_count", r.entry_mismatch_count},
         {"checks", r.checks},
         {"search_candidates", r.search_candidates},
         {"elapsed_ms", with_timings ? r.elapsed_ms : 0.0}};
  j["witness"] = r.witness ? mat_to_json(*r.witness) : Json(nullptr);
  return j;
}

}  // namespace convmacw
