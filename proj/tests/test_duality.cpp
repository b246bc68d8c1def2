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

#include <random>

#include <gtest/gtest.h>

#include "convmacw/duality.hpp"
#include "convmacw/errors.hpp"
#include "convmacw/sampling.hpp"
#include "test_util.hpp"

namespace convmacw {
namespace {

using testing::mat;

const DualPair& binary_pair() {
  static const DualPair dp = [] {
    const CodeDocument doc = testing::binary_code();
    return prepare_dual_pair(doc.generator, doc.dual_generator);
  }();
  return dp;
}

const DualPair& ternary_pair() {
  static const DualPair dp = [] {
    const CodeDocument doc = testing::ternary_code();
    return prepare_dual_pair(doc.generator, doc.dual_generator);
  }();
  return dp;
}

TEST(MacW, BinaryMatrixIsSylvesterHadamard) {
  const Field f = Field::prime(2);
  const MacWMatrix h = MacWMatrix::identity(f, 3);
  EXPECT_EQ(h.scale_pow(), -3);
  const auto states = enumerate_vectors(f, 3);
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t y = 0; y < 8; ++y) {
      EXPECT_EQ(h.exponent(x, y), dot(f, states[x], states[y]));
      EXPECT_EQ(h.entry(x, y), CycloNum::from_rational(2, dot(f, states[x], states[y]) ? -1 : 1));
    }
  }
}

TEST(MacW, Identities) {
  std::mt19937_64 rng(5);
  const std::vector<FieldSpec> specs = {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                        FieldSpec::extension(2, {1, 1, 1})};
  for (const FieldSpec& spec : specs) {
    const Field f(spec);
    for (std::size_t d = 1; d <= 2; ++d) {
      std::vector<Mat> samples;
      for (int t = 0; t < 4; ++t) samples.push_back(random_invertible(f, d, rng));
      for (std::uint32_t z = 1; z < f.p(); ++z) EXPECT_NO_THROW(check_macw_identities(f, d, z, samples));
    }
  }
  EXPECT_THROW(MacWMatrix::build(Field::prime(3), 1, Mat::identity(Field::prime(3), 1), 3), UsageError);
  EXPECT_THROW(check_macw_identities(Field::prime(3), 9, 1, {}), GuardExceeded);
}

TEST(Duality, MatrixMOfBinaryCode) {
  const DualPair& dp = binary_pair();
  const Mat M = matrix_M(dp.cf, dp.dual);
  EXPECT_EQ(rank(M), 4u);
  check_matrix_M(M, dp);
  EXPECT_EQ(check_ell_transport(M, dp), dp.dual_spaces.delta.elements().size());
}

TEST(Duality, EllRoutesAgree) {
  const DualPair& dp = binary_pair();
  EXPECT_EQ(ell_closed_form(dp.lambda, dp.cf, dp.spaces), dp.ell);
  check_ell_transform_cases(dp);
  check_zeta_independence(ternary_pair());
}

TEST(Duality, WeakIdentity) {
  const WeakIdentityResult w = weak_identity_check(binary_pair());
  EXPECT_EQ(w.comparisons, 64u);
  EXPECT_EQ(w.mismatches, 0u);
  EXPECT_TRUE(w.multiset_equal);
  EXPECT_TRUE(weak_identity_check(ternary_pair()).multiset_equal);
}

TEST(Duality, TheoremQOnBinaryCode) {
  const DualPair& dp = binary_pair();
  const TheoremResult t = theorem_q(dp);
  EXPECT_EQ(t.witness, mat(dp.cf.field, {{1, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(t.mismatches, 0u);
  EXPECT_EQ(t.comparisons, 64u);
  EXPECT_THROW(theorem_p(dp), PreconditionError);
  EXPECT_THROW(theorem_q(ternary_pair()), PreconditionError);
}

TEST(Duality, TheoremPWithRolesSwapped) {
  const CodeDocument doc = testing::binary_code();
  const DualPair dp = prepare_dual_pair(*doc.dual_generator, doc.generator);
  EXPECT_EQ(dp.cf.r, 3u);
  const TheoremResult t = theorem_p(dp);
  EXPECT_EQ(t.mismatches, 0u);
  // P for the swapped pair is the transpose of Q for the original pair.
  EXPECT_EQ(t.witness, theorem_q(binary_pair()).witness.transpose());
}

TEST(Duality, SearchOnBothSampleCodes) {
  const DualPair& dp = ternary_pair();
  const SearchResult s = conjecture_search(dp);
  ASSERT_TRUE(s.witness);
  EXPECT_FALSE(s.exhausted);
  EXPECT_EQ(witness_mismatches(dp, *s.witness), 0u);
  EXPECT_EQ(witness_mismatches(dp, mat(dp.cf.field, {{1, 1}, {1, 2}})), 0u);
  EXPECT_GT(witness_mismatches(dp, Mat::identity(dp.cf.field, 2)), 0u);

  const DualPair& dpb = binary_pair();
  const SearchResult s8 = conjecture_search(dpb);
  ASSERT_TRUE(s8.witness);
  EXPECT_EQ(witness_mismatches(dpb, *s8.witness), 0u);
  EXPECT_EQ(witness_mismatches(dpb, theorem_q(dpb).witness), 0u);
}

TEST(Duality, UnitMemory) {
  const Field f = Field::prime(3);
  const PolyMatrix g = testing::poly_matrix(f, {{"1+z", "1", "2z"}});
  const DualPair dp = prepare_dual_pair(g, std::nullopt);
  EXPECT_EQ(unit_memory_check(dp), 0u);
  EXPECT_THROW(unit_memory_check(binary_pair()), PreconditionError);
  const DualityReport rep = verify(dp, VerifyMode::Auto);
  EXPECT_EQ(rep.theorem_used, "delta=1");
  EXPECT_EQ(rep.verdict, "verified");
}

TEST(Duality, BlockCodes) {
  const Field f = Field::prime(2);
  EXPECT_TRUE(block_macwilliams_check(mat(f, {{1, 1, 1, 0}, {0, 1, 1, 1}})));
  const DualPair dp = prepare_dual_pair(testing::poly_matrix(f, {{"1", "1", "0"}}), std::nullopt);
  const DualityReport rep = verify(dp, VerifyMode::Auto);
  EXPECT_EQ(rep.theorem_used, "delta=0");
  EXPECT_EQ(rep.verdict, "verified");
  ASSERT_TRUE(rep.witness);
  EXPECT_EQ(rep.witness->rows(), 0u);
}

TEST(Duality, VerifyDispatch) {
  const DualityReport q = verify(binary_pair(), VerifyMode::Auto);
  EXPECT_EQ(q.theorem_used, "r_hat=delta");
  EXPECT_EQ(q.verdict, "verified");
  const DualityReport s = verify(ternary_pair(), VerifyMode::Auto, mat(Field::prime(3), {{1, 1}, {1, 2}}));
  EXPECT_EQ(s.theorem_used, "conjecture-search");
  EXPECT_EQ(s.verdict, "verified");
  EXPECT_GT(s.search_candidates, 0u);
  const DualityReport bad = verify(ternary_pair(), VerifyMode::Weak, Mat::identity(Field::prime(3), 2));
  EXPECT_EQ(bad.verdict, "witness-rejected");
  EXPECT_GT(bad.entry_mismatch_count, 0u);
  EXPECT_EQ(verify(ternary_pair(), VerifyMode::Weak).theorem_used, "multiset-only");
  EXPECT_THROW(verify(ternary_pair(), VerifyMode::Auto, mat(Field::prime(3), {{1, 1}, {1, 1}})), UsageError);
  EXPECT_THROW(parse_verify_mode("fast"), UsageError);
}

TEST(Duality, RejectsWrongDual) {
  const CodeDocument doc = testing::binary_code();
  EXPECT_THROW(prepare_dual_pair(doc.generator, doc.generator), UsageError);
}

}  // namespace
}  // namespace convmacw
