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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "convmacw/duality.hpp"
#include "convmacw/errors.hpp"
#include "property_suite.hpp"
#include "test_util.hpp"

namespace cm = convmacw;
namespace ct = convmacw::testing;

namespace {

using Grid = std::vector<std::vector<std::string>>;

const Grid kLambda = {
    {"1+W^3", "0", "0", "0", "W+W^2", "0", "0", "0"},
    {"W+W^2", "0", "0", "0", "W+W^2", "0", "0", "0"},
    {"0", "W^2+W^3", "0", "0", "0", "W+W^4", "0", "0"},
    {"0", "W^2+W^3", "0", "0", "0", "W^2+W^3", "0", "0"},
    {"0", "0", "W^2+W^3", "0", "0", "0", "W^2+W^3", "0"},
    {"0", "0", "W+W^4", "0", "0", "0", "W^2+W^3", "0"},
    {"0", "0", "0", "W^3+W^4", "0", "0", "0", "W^3+W^4"},
    {"0", "0", "0", "W^3+W^4", "0", "0", "0", "W^2+W^5"},
};

const Grid kLambdaHat = {
    {"1", "W", "W", "W^2", "W^2", "W^3", "W^3", "W^4"},
    {"W", "W^2", "1", "W", "W^3", "W^4", "W^2", "W^3"},
    {"W^3", "W^2", "W^4", "W^3", "W^3", "W^2", "W^4", "W^3"},
    {"W^4", "W^3", "W^3", "W^2", "W^4", "W^3", "W^3", "W^2"},
    {"W^2", "W^3", "W^3", "W^4", "W^2", "W^3", "W^3", "W^4"},
    {"W^3", "W^4", "W^2", "W^3", "W^3", "W^4", "W^2", "W^3"},
    {"W", "1", "W^2", "W", "W^3", "W^2", "W^4", "W^3"},
    {"W^2", "W", "W", "1", "W^4", "W^3", "W^3", "W^2"},
};

const std::vector<std::vector<int>> kHadamard = {
    {1, 1, 1, 1, 1, 1, 1, 1},     {1, -1, 1, -1, 1, -1, 1, -1}, {1, 1, -1, -1, 1, 1, -1, -1},
    {1, -1, -1, 1, 1, -1, -1, 1}, {1, 1, 1, 1, -1, -1, -1, -1}, {1, -1, 1, -1, -1, 1, -1, 1},
    {1, 1, -1, -1, -1, -1, 1, 1}, {1, -1, -1, 1, -1, 1, 1, -1},
};

const std::vector<std::vector<int>> kPermQ = {
    {1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1},
    {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0},
};

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::size_t matching_entries(const cm::AdjMatrix& m, const Grid& golden) {
  std::size_t ok = 0;
  for (std::uint32_t x = 0; x < golden.size(); ++x) {
    for (std::uint32_t y = 0; y < golden.size(); ++y) ok += m.at(x, y) == ct::we(golden[x][y]);
  }
  return ok;
}

Verdict criterion1() {
  const cm::CodeDocument doc = ct::binary_code();
  const cm::AdjMatrix lam = cm::adjacency_fast(cm::build_ccf(doc.generator));
  const std::size_t ok = lam.dim() == 8 ? matching_entries(lam, kLambda) : 0;
  const bool spot = lam.at(3, 1) == ct::we("W^2+W^3") && lam.at(0, 0) == ct::we("1+W^3");
  return {ok == 64 && spot, std::to_string(ok) + "/64 entries match"};
}

Verdict criterion2() {
  const cm::CodeDocument doc = ct::binary_code();
  const cm::PolyMatrix computed = cm::dual_generator(doc.generator);
  const bool same = cm::same_code(computed, *doc.dual_generator);
  const cm::AdjMatrix lam = cm::adjacency_fast(cm::build_ccf(doc.generator));
  const cm::AdjMatrix hat = cm::adjacency_fast(cm::build_ccf(*doc.dual_generator));
  const std::size_t ok = hat.dim() == 8 ? matching_entries(hat, kLambdaHat) : 0;
  std::size_t ones = 0;
  for (const auto& [key, w] : hat.entries()) ones += w == cm::WePoly({1});
  std::ostringstream os;
  os << "dual encoder generates the printed dual code: " << (same ? "yes" : "no") << "; " << ok
     << "/64 entries match; nonzero " << lam.support_size() << " vs " << hat.support_size()
     << "; entries equal to 1: " << ones;
  return {same && ok == 64 && lam.support_size() == 16 && hat.support_size() == 64 && ones == 4, os.str()};
}

Verdict criterion3() {
  const cm::Field f = cm::Field::prime(2);
  const cm::MacWMatrix h = cm::MacWMatrix::identity(f, 3);
  std::size_t ok_h = 0;
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t y = 0; y < 8; ++y) {
      ok_h += h.entry(x, y) == cm::CycloNum::from_rational(2, kHadamard[x][y]);
    }
  }
  const auto pm = cm::permutation_matrix(
      cm::make_state_permutation(ct::mat(f, {{1, 0, 1}, {1, 0, 0}, {0, 1, 0}})));
  const bool ok_p = pm == kPermQ;
  return {ok_h == 64 && h.scale_pow() == -3 && ok_p,
          "H: " + std::to_string(ok_h) + "/64 signs match; P(Q): " + (ok_p ? "match" : "MISMATCH")};
}

Verdict criterion4() {
  const cm::CodeDocument doc = ct::binary_code();
  const cm::DualPair dp = cm::prepare_dual_pair(doc.generator, doc.dual_generator);
  const cm::TheoremResult t = cm::theorem_q(dp);
  const bool q_ok = t.witness == ct::mat(dp.cf.field, {{1, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  // Independent recomputation of the right-hand side, permuted by Q.
  const cm::AdjMatrix rhs = ct::transformed_oracle(dp.lambda, dp.cf.field, dp.cf.k);
  const cm::StatePermutation sp = cm::make_state_permutation(t.witness);
  std::size_t ok = 0;
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t y = 0; y < 8; ++y) ok += dp.lambda_hat.at(x, y) == rhs.at(sp.image[x], sp.image[y]);
  }
  return {q_ok && ok == 64 && t.mismatches == 0,
          std::to_string(ok) + "/64 entrywise equalities; engine mismatches " + std::to_string(t.mismatches)};
}

Verdict criterion5() {
  const cm::CodeDocument doc = ct::ternary_code();
  const cm::DualPair dp = cm::prepare_dual_pair(doc.generator, doc.dual_generator);
  std::size_t reps = 0;
  cm::for_each_pgl_representative(dp.cf.field, 2, [&](const cm::Mat&) { return ++reps, true; });
  const cm::SearchResult s = cm::conjecture_search(dp);
  const cm::Mat expected_p = ct::mat(dp.cf.field, {{1, 1}, {1, 2}});
  const cm::DualityReport rep = cm::verify(dp, cm::VerifyMode::Search, expected_p);
  const bool found = s.witness && cm::witness_mismatches(dp, *s.witness) == 0;
  std::ostringstream os;
  os << "representatives " << reps << "; witness "
     << (s.witness ? cm::mat_to_json(*s.witness).dump() : std::string("none")) << " after "
     << s.candidates_tried << " candidates; [[1,1],[1,2]] " << rep.verdict;
  return {reps == 24 && found && rep.verdict == "verified" && cm::witness_mismatches(dp, expected_p) == 0,
          os.str()};
}

Verdict criterion6() {
  std::size_t codes = 0, configs = 0, checks = 0;
  std::vector<std::string> failures, flagged;
  std::size_t searches = 0;
  std::uint64_t seed = 20260601;
  for (const ct::CodeConfig& c : ct::property_configs()) {
    const ct::SuiteOutcome o = ct::run_config(c, 50, seed++);
    ++configs;
    codes += o.codes;
    searches += o.search_runs;
    for (const auto& [letter, n] : o.passed) checks += n;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    flagged.insert(flagged.end(), o.flagged.begin(), o.flagged.end());
    if (o.codes < 50) failures.push_back(c.name() + ": only " + std::to_string(o.codes) + " codes");
  }
  for (const auto& f : failures) std::cout << "  failure: " << f << '\n';
  for (const auto& f : flagged) std::cout << "  flagged: " << f << '\n';
  std::ostringstream os;
  os << configs << " configurations, " << codes << " codes, " << checks << " property checks, "
     << searches << " searches, " << flagged.size() << " counterexample candidates flagged, "
     << failures.size() << " failures";
  return {failures.empty(), os.str()};
}

Verdict criterion7() {
  std::size_t codes = 0;
  std::vector<std::string> failures;
  std::uint64_t seed = 7001;
  for (const cm::FieldSpec& spec :
       {cm::FieldSpec::prime(2), cm::FieldSpec::prime(3), cm::FieldSpec::extension(2, {1, 1, 1})}) {
    const ct::SuiteOutcome o = ct::run_block_codes(spec, 6, 50, seed++);
    codes += o.codes;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  for (const auto& f : failures) std::cout << "  failure: " << f << '\n';
  return {failures.empty(), std::to_string(codes) + " block codes, " + std::to_string(failures.size()) +
                                " failures"};
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Verdict()> run;
    double budget_ms;
  };
  const std::vector<Criterion> criteria = {
      {"golden adjacency matrix of the (5,2,3) binary code", criterion1, 1000},
      {"golden adjacency matrix of its dual", criterion2, 1000},
      {"MacWilliams matrix q=2, delta=3 and permutation P(Q)", criterion3, 1000},
      {"main identity with Q on the (5,2,3) pair", criterion4, 5000},
      {"projective search on the ternary (3,2,2) code", criterion5, 5000},
      {"random-code property suite", criterion6, 60000},
      {"block-code MacWilliams identity", criterion7, 60000},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && ms > criteria[i].budget_ms) {
      v.pass = false;
      v.detail += "; over the time budget";
    }
    std::cout << "criterion " << i + 1 << ": " << (v.pass ? "PASS" : "FAIL") << " - " << criteria[i].name
              << " (" << v.detail << "; " << static_cast<long>(ms) << " ms)" << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
