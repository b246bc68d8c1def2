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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "convmacw/errors.hpp"
#include "convmacw/io.hpp"

namespace cm = convmacw;

namespace {

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kGuard = 2,
  kCounterexample = 3,
  kIdentity = 4,
  kWitnessRejected = 5,
};

void emit(const cm::Json& j, const std::string& output) {
  if (output.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw cm::UsageError("cannot write '" + output + "'");
  out << j.dump(2) << '\n';
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_info(const std::string& file, bool json) {
  const cm::CodeDocument doc = cm::load_code_document(file);
  const cm::BasicnessReport basic = cm::basicness(doc.generator);
  if (!basic.basic) {
    std::cerr << "error: encoder is not basic: " << basic.diagnostic << '\n';
    return kUsage;
  }
  const cm::MinimalityReport minimal = cm::is_minimal(doc.generator);
  if (!minimal.minimal) {
    std::cerr << "error: encoder is basic but not minimal (row degrees sum to more than "
              << minimal.degree << ")\n";
    return kUsage;
  }
  const cm::ControllerForm cf = cm::build_ccf(doc.generator);
  const cm::StateSpaces s = cm::analyze(cf);
  if (json) {
    cm::Json j{{"profile", cm::profile_to_json(cf.profile)},
               {"r_hat", s.r_hat},
               {"basic", true},
               {"minimal", true},
               {"dim_c_const", s.c_const.dim()},
               {"dim_c_c", s.c_big.dim()}};
    if (doc.label) j["label"] = *doc.label;
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  const cm::CodeProfile& p = cf.profile;
  std::cout << "(" << p.n << "," << p.k << "," << p.delta << "), indices (" << join(p.forney)
            << "), r=" << p.r << ", r̂=" << s.r_hat << '\n'
            << "basic: yes\nminimal: yes\n"
            << "dim C_const: " << s.c_const.dim() << '\n'
            << "dim C_C: " << s.c_big.dim() << '\n';
  return kOk;
}

int cmd_adjacency(const std::string& file, const std::string& format, bool oracle,
                  std::uint64_t limit) {
  const cm::CodeDocument doc = cm::load_code_document(file);
  const cm::ControllerForm cf = cm::build_ccf(doc.generator);
  const cm::AdjMatrix lambda = cm::adjacency_fast(cf, limit);
  if (format == "json") {
    std::cout << cm::adjacency_to_json(lambda).dump(2) << '\n';
  } else {
    std::cout << lambda.to_text();
  }
  if (oracle) {
    const cm::AdjMatrix brute = cm::adjacency_bruteforce(cf, limit);
    if (!(brute == lambda)) {
      std::cerr << "oracle: MISMATCH\n";
      return kIdentity;
    }
    std::cerr << "oracle: match (" << lambda.support_size() << " entries)\n";
  }
  return kOk;
}

int cmd_dual(const std::string& file, const std::string& output) {
  const cm::CodeDocument doc = cm::load_code_document(file);
  const cm::PolyMatrix dual = cm::dual_generator(doc.generator);
  const cm::PolyMatrix product = dual * doc.generator.transpose();
  if (!product.is_zero()) throw cm::IdentityViolation("dual generator is not orthogonal to G");
  cm::CodeDocument out{doc.field, dual, std::nullopt, std::nullopt};
  if (doc.label) out.label = "dual of " + *doc.label;
  cm::Json j = cm::document_to_json(out);
  j["certificate"] = cm::Json{{"dual_times_generator_transpose", cm::generator_to_json(product)},
                              {"is_zero", true}};
  emit(j, output);
  return kOk;
}

int exit_for(const std::string& verdict) {
  if (verdict == "verified") return kOk;
  if (verdict == "witness-rejected") return kWitnessRejected;
  return kCounterexample;
}

int cmd_verify(const std::string& file, const std::string& mode, const std::string& witness,
               std::uint32_t zeta, std::uint64_t limit, bool no_timings, const std::string& output) {
  const cm::CodeDocument doc = cm::load_code_document(file);
  const cm::VerifyMode m = cm::parse_verify_mode(mode);
  const cm::DualPair dp = cm::prepare_dual_pair(doc.generator, doc.dual_generator, {limit, zeta});
  std::optional<cm::Mat> w;
  if (!witness.empty()) {
    w = cm::parse_matrix(witness, dp.cf.field);
    if (w->rows() != dp.cf.delta || w->cols() != dp.cf.delta) {
      throw cm::UsageError("witness must be " + std::to_string(dp.cf.delta) + " x " +
                           std::to_string(dp.cf.delta));
    }
  }
  const cm::DualityReport rep = cm::verify(dp, m, w);
  emit(cm::report_to_json(rep, !no_timings), output);
  if (rep.verdict == "counterexample-candidate") {
    std::cerr << "COUNTEREXAMPLE CANDIDATE: no projective representative satisfies the identity\n";
  }
  return exit_for(rep.verdict);
}

int cmd_search(const std::string& file, std::uint64_t limit) {
  const cm::CodeDocument doc = cm::load_code_document(file);
  const cm::DualPair dp = cm::prepare_dual_pair(doc.generator, doc.dual_generator, {limit, 1});
  const cm::SearchResult s = cm::conjecture_search(dp, limit);
  cm::Json j{{"candidates_tried", s.candidates_tried},
             {"representatives", s.representatives},
             {"exhausted", s.exhausted}};
  j["witness"] = s.witness ? cm::mat_to_json(*s.witness) : cm::Json(nullptr);
  std::cout << j.dump(2) << '\n';
  if (!s.witness) {
    std::cerr << "COUNTEREXAMPLE CANDIDATE: search exhausted without a witness\n";
    return kCounterexample;
  }
  return kOk;
}

int cmd_macw(std::uint32_t p, std::uint32_t s, const std::vector<std::uint32_t>& modulus,
             std::size_t delta, std::uint32_t zeta, const std::string& format) {
  if (s > 1 && modulus.empty()) throw cm::UsageError("--modulus is required when s > 1");
  const cm::Field f(s == 1 ? cm::FieldSpec::prime(p) : cm::FieldSpec::extension(p, modulus));
  const cm::MacWMatrix h = cm::MacWMatrix::build(f, delta, cm::Mat::identity(f, delta), zeta);
  std::vector<std::vector<int>> grid(h.dim(), std::vector<int>(h.dim()));
  for (std::uint32_t x = 0; x < h.dim(); ++x) {
    for (std::uint32_t y = 0; y < h.dim(); ++y) {
      const int e = h.exponent(x, y);
      grid[x][y] = p == 2 ? (e == 0 ? 1 : -1) : e;
    }
  }
  if (format == "json") {
    cm::Json j{{"q", f.q()},
               {"delta", delta},
               {"zeta_exponent", zeta},
               {"scale", "q^(-delta/2)"},
               {"entries", p == 2 ? "signs" : "zeta exponents"},
               {"matrix", grid}};
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "# q^(-" << delta << "/2) times " << (p == 2 ? "signs" : "powers of zeta") << '\n';
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) std::cout << ' ';
      if (p == 2 && row[j] > 0) std::cout << ' ';
      std::cout << row[j];
    }
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adjacency matrices and MacWilliams duality for convolutional codes"};
  app.require_subcommand(1);
  std::uint64_t limit = cm::kDefaultLimit;

  std::string file;
  bool json = false;
  auto* info = app.add_subcommand("info", "Print code parameters");
  info->add_option("file", file, "Code document")->required();
  info->add_flag("--json", json, "JSON output");

  std::string format = "text";
  bool oracle = false;
  auto* adj = app.add_subcommand("adjacency", "Print the weight adjacency matrix");
  adj->add_option("file", file, "Code document")->required();
  adj->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  adj->add_flag("--oracle", oracle, "Cross-check against brute-force enumeration");
  adj->add_option("--limit", limit, "Enumeration guard");

  std::string output;
  auto* dual = app.add_subcommand("dual", "Print a generator document for the dual code");
  dual->add_option("file", file, "Code document")->required();
  dual->add_option("-o,--output", output, "Write to file");

  std::string mode = "auto";
  std::string witness;
  std::uint32_t zeta = 1;
  bool no_timings = false;
  auto* ver = app.add_subcommand("verify", "Verify the duality identity and print a report");
  ver->add_option("file", file, "Code document")->required();
  ver->add_option("--mode", mode)->check(
      CLI::IsMember({"auto", "weak", "theorem-q", "theorem-p", "search", "unit-memory"}));
  ver->add_option("--check-witness", witness, "Matrix such as [[1,1],[1,2]]");
  ver->add_option("--zeta-exponent", zeta, "Use zeta^d as the primitive root");
  ver->add_option("--limit", limit, "Enumeration guard");
  ver->add_flag("--no-timings", no_timings, "Report elapsed_ms as 0");
  ver->add_option("-o,--output", output, "Write to file");

  auto* search = app.add_subcommand("search-p", "Search for a conjugating state transformation");
  search->add_option("file", file, "Code document")->required();
  search->add_option("--limit", limit, "Enumeration guard");

  std::uint32_t p = 2, s = 1;
  std::vector<std::uint32_t> modulus;
  std::size_t delta = 1;
  auto* macw = app.add_subcommand("macw", "Print the unnormalized MacWilliams matrix");
  macw->add_option("--p", p, "Characteristic")->capture_default_str();
  macw->add_option("--s", s, "Extension degree")->capture_default_str();
  macw->add_option("--modulus", modulus, "Monic modulus coefficients, constant first");
  macw->add_option("--delta", delta, "State dimension")->capture_default_str();
  macw->add_option("--zeta-exponent", zeta, "Use zeta^d as the primitive root");
  macw->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(file, json);
    if (*adj) return cmd_adjacency(file, format, oracle, limit);
    if (*dual) return cmd_dual(file, output);
    if (*ver) return cmd_verify(file, mode, witness, zeta, limit, no_timings, output);
    if (*search) return cmd_search(file, limit);
    if (*macw) return cmd_macw(p, s, modulus, delta, zeta, format);
  } catch (const cm::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --limit to allow)\n";
    return kGuard;
  } catch (const cm::IdentityViolation& e) {
    std::cerr << "internal error: identity violated: " << e.what() << '\n';
    return kIdentity;
  } catch (const cm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
