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

#include <gtest/gtest.h>

#include "convmacw/adjacency.hpp"
#include "convmacw/errors.hpp"
#include "test_util.hpp"

namespace convmacw {
namespace {

using testing::we;

TEST(Adjacency, BinaryCodeEntries) {
  const ControllerForm cf = build_ccf(testing::binary_code().generator);
  const AdjMatrix lam = adjacency_fast(cf);
  EXPECT_EQ(lam.support_size(), 16u);
  EXPECT_EQ(lam.at(0, 0), we("1+W^3"));
  EXPECT_EQ(lam.at(3, 1), we("W^2+W^3"));  // X = (0,1,1), Y = (0,0,1)
  EXPECT_EQ(lam.at(7, 7), we("W^2+W^5"));
  EXPECT_TRUE(lam.at(0, 1).is_zero());
}

TEST(Adjacency, FastMatchesBruteForceAndTrellis) {
  for (const CodeDocument& doc : {testing::binary_code(), testing::ternary_code()}) {
    const ControllerForm cf = build_ccf(doc.generator);
    const AdjMatrix fast = adjacency_fast(cf);
    EXPECT_EQ(fast, adjacency_bruteforce(cf));
    const auto oracle = testing::trellis_oracle(doc.generator);
    EXPECT_EQ(oracle.size(), fast.support_size());
    for (const auto& [key, w] : oracle) EXPECT_EQ(fast.at(key.first, key.second), w);
  }
}

TEST(Adjacency, Structure) {
  const CodeDocument doc = testing::binary_code();
  for (const PolyMatrix& g : {doc.generator, *doc.dual_generator}) {
    const ControllerForm cf = build_ccf(g);
    const StateSpaces s = analyze(cf);
    const AdjMatrix lam = adjacency_fast(cf);
    check_adjacency_structure(lam, cf, s);
    const EntrySums sums = check_entry_sums(lam, cf, s);
    EXPECT_EQ(sums.over_all.coefficient_sum(),
              static_cast<std::int64_t>(checked_power(2, cf.delta - s.r_hat + c_big(cf).dim())));
  }
}

TEST(Adjacency, DualMatrixCounts) {
  const ControllerForm du = build_ccf(*testing::binary_code().dual_generator);
  const AdjMatrix lam = adjacency_fast(du);
  EXPECT_EQ(lam.support_size(), 64u);
  std::size_t ones = 0;
  for (const auto& [key, w] : lam.entries()) ones += w == WePoly({1});
  EXPECT_EQ(ones, 4u);
}

TEST(Adjacency, StatePermutation) {
  const Field f = Field::prime(2);
  const Mat q = testing::mat(f, {{1, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const StatePermutation sp = make_state_permutation(q);
  const auto pm = permutation_matrix(sp);
  // (0,0,1) Q = (0,1,0): row 1 has its 1 in column 2.
  EXPECT_EQ(pm[1][2], 1);
  EXPECT_EQ(sp.preimage[sp.image[5]], 5u);
  EXPECT_THROW(make_state_permutation(testing::mat(f, {{1, 1}, {1, 1}})), UsageError);

  const AdjMatrix lam = adjacency_fast(build_ccf(testing::binary_code().generator));
  const AdjMatrix c = conjugate(lam, sp);
  for (std::uint32_t x = 0; x < 8; ++x) {
    for (std::uint32_t y = 0; y < 8; ++y) EXPECT_EQ(c.at(x, y), lam.at(sp.image[x], sp.image[y]));
  }
  EXPECT_EQ(find_conjugating_matrix(c, lam, f), q);
}

TEST(Adjacency, ProjectiveRepresentatives) {
  std::size_t count = 0;
  for_each_pgl_representative(Field::prime(2), 3, [&](const Mat&) { return ++count, true; });
  EXPECT_EQ(count, 168u);
  count = 0;
  Mat first(Field::prime(3), 2, 2);
  for_each_pgl_representative(Field::prime(3), 2, [&](const Mat& m) {
    if (count++ == 0) first = m;
    return true;
  });
  EXPECT_EQ(count, 24u);
  EXPECT_EQ(first, testing::mat(Field::prime(3), {{0, 1}, {1, 0}}));
  EXPECT_THROW(for_each_pgl_representative(Field::prime(3), 3, [](const Mat&) { return true; }, 1000),
               GuardExceeded);
}

TEST(Adjacency, BlockCodeIsSingleEntry) {
  const Field f = Field::prime(2);
  const ControllerForm cf = build_ccf(testing::poly_matrix(f, {{"1", "1", "1"}}));
  const AdjMatrix lam = adjacency_fast(cf);
  EXPECT_EQ(lam.dim(), 1u);
  EXPECT_EQ(lam.at(0, 0), we("1+W^3"));
  EXPECT_EQ(lam.to_text(), "1 + W^3\n");
}

TEST(Adjacency, Guards) {
  const ControllerForm cf = build_ccf(testing::binary_code().generator);
  EXPECT_THROW(adjacency_bruteforce(cf, 100), GuardExceeded);
  try {
    adjacency_fast(cf, 4);
    FAIL();
  } catch (const GuardExceeded& e) {
    EXPECT_EQ(e.needed(), 32u);
    EXPECT_EQ(e.limit(), 4u);
  }
}

}  // namespace
}  // namespace convmacw
