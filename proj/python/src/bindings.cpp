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

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "convmacw/errors.hpp"
#include "convmacw/io.hpp"

namespace py = pybind11;
namespace cm = convmacw;

namespace {

cm::Field make_field(std::uint32_t p, std::uint32_t s, const std::vector<std::uint32_t>& modulus) {
  return cm::Field(s == 1 && modulus.empty() ? cm::FieldSpec::prime(p)
                                             : cm::FieldSpec::extension(p, modulus));
}

std::string info(const std::string& doc_json) {
  const cm::CodeDocument doc = cm::parse_code_document(doc_json);
  const cm::ControllerForm cf = cm::build_ccf(doc.generator);
  const cm::StateSpaces s = cm::analyze(cf);
  return cm::Json{{"profile", cm::profile_to_json(cf.profile)},
                  {"r_hat", s.r_hat},
                  {"dim_c_const", s.c_const.dim()},
                  {"dim_c_c", s.c_big.dim()}}
      .dump();
}

std::string adjacency(const std::string& doc_json, bool oracle, std::uint64_t limit) {
  const cm::CodeDocument doc = cm::parse_code_document(doc_json);
  const cm::ControllerForm cf = cm::build_ccf(doc.generator);
  const cm::AdjMatrix lambda = cm::adjacency_fast(cf, limit);
  if (oracle && !(cm::adjacency_bruteforce(cf, limit) == lambda)) {
    throw cm::IdentityViolation("brute-force adjacency differs");
  }
  return cm::adjacency_to_json(lambda).dump();
}

std::string adjacency_text(const std::string& doc_json, std::uint64_t limit) {
  const cm::CodeDocument doc = cm::parse_code_document(doc_json);
  return cm::adjacency_fast(cm::build_ccf(doc.generator), limit).to_text();
}

std::string dual(const std::string& doc_json) {
  const cm::CodeDocument doc = cm::parse_code_document(doc_json);
  cm::CodeDocument out{doc.field, cm::dual_generator(doc.generator), std::nullopt, std::nullopt};
  return cm::document_to_json(out).dump();
}

bool same_code(const std::string& a_json, const std::string& b_json) {
  const cm::CodeDocument a = cm::parse_code_document(a_json);
  const cm::CodeDocument b = cm::parse_code_document(b_json);
  if (!(a.field == b.field)) return false;
  return cm::same_code(a.generator, b.generator);
}

std::string verify(const std::string& doc_json, const std::string& mode,
                   const std::optional<std::string>& check_witness, std::uint32_t zeta_exponent,
                   std::uint64_t limit, bool timings) {
  const cm::CodeDocument doc = cm::parse_code_document(doc_json);
  const cm::DualPair dp =
      cm::prepare_dual_pair(doc.generator, doc.dual_generator, {limit, zeta_exponent});
  std::optional<cm::Mat> w;
  if (check_witness) w = cm::parse_matrix(*check_witness, dp.cf.field);
  return cm::report_to_json(cm::verify(dp, cm::parse_verify_mode(mode), w), timings).dump();
}

std::string search_p(const std::string& doc_json, std::uint64_t limit) {
  const cm::CodeDocument doc = cm::parse_code_document(doc_json);
  const cm::DualPair dp = cm::prepare_dual_pair(doc.generator, doc.dual_generator, {limit, 1});
  const cm::SearchResult s = cm::conjecture_search(dp, limit);
  cm::Json j{{"candidates_tried", s.candidates_tried},
             {"representatives", s.representatives},
             {"exhausted", s.exhausted}};
  j["witness"] = s.witness ? cm::mat_to_json(*s.witness) : cm::Json(nullptr);
  return j.dump();
}

std::vector<std::vector<int>> macw_exponents(std::uint32_t p, std::uint32_t s,
                                             const std::vector<std::uint32_t>& modulus,
                                             std::size_t delta, std::uint32_t zeta_exponent) {
  const cm::Field f = make_field(p, s, modulus);
  const cm::MacWMatrix h = cm::MacWMatrix::build(f, delta, cm::Mat::identity(f, delta), zeta_exponent);
  std::vector<std::vector<int>> out(h.dim(), std::vector<int>(h.dim()));
  for (std::uint32_t x = 0; x < h.dim(); ++x) {
    for (std::uint32_t y = 0; y < h.dim(); ++y) out[x][y] = h.exponent(x, y);
  }
  return out;
}

std::string normalize_polynomial(const std::string& text, std::uint32_t p, std::uint32_t s,
                                 const std::vector<std::uint32_t>& modulus) {
  return cm::parse_polynomial(text, make_field(p, s, modulus)).to_string();
}

}  // namespace

PYBIND11_MODULE(_convmacw, m) {
  m.doc() = "Native core of convmacw; the functions exchange JSON text.";

  auto base = py::register_exception<cm::UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<cm::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<cm::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<cm::DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<cm::GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception<cm::IdentityViolation>(m, "IdentityViolation", PyExc_AssertionError);

  m.attr("DEFAULT_LIMIT") = cm::kDefaultLimit;
  const std::uint64_t lim = cm::kDefaultLimit;

  m.def("info", &info, py::arg("document"));
  m.def("adjacency", &adjacency, py::arg("document"), py::arg("oracle") = false,
        py::arg("limit") = lim);
  m.def("adjacency_text", &adjacency_text, py::arg("document"), py::arg("limit") = lim);
  m.def("dual", &dual, py::arg("document"));
  m.def("same_code", &same_code, py::arg("a"), py::arg("b"));
  m.def("verify", &verify, py::arg("document"), py::arg("mode") = "auto",
        py::arg("check_witness") = py::none(), py::arg("zeta_exponent") = 1,
        py::arg("limit") = lim, py::arg("timings") = false);
  m.def("search_p", &search_p, py::arg("document"), py::arg("limit") = lim);
  m.def("macw_exponents", &macw_exponents, py::arg("p"), py::arg("s") = 1,
        py::arg("modulus") = std::vector<std::uint32_t>{}, py::arg("delta") = 1,
        py::arg("zeta_exponent") = 1);
  m.def("normalize_polynomial", &normalize_polynomial, py::arg("text"), py::arg("p"),
        py::arg("s") = 1, py::arg("modulus") = std::vector<std::uint32_t>{});
}
