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

#include "convmacw/errors.hpp"
#include "convmacw/state_space.hpp"
#include "test_util.hpp"

namespace convmacw {
namespace {

using testing::mat;

TEST(StateSpace, ControllerFormOfBinaryCode) {
  const CodeDocument doc = testing::binary_code();
  const ControllerForm cf = build_ccf(doc.generator);
  const Field& f = cf.field;
  EXPECT_EQ(cf.A, mat(f, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(cf.B, mat(f, {{1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(cf.C, mat(f, {{1, 0, 0, 0, 1}, {0, 1, 1, 0, 0}, {1, 0, 0, 0, 0}}));
  EXPECT_EQ(cf.D, mat(f, {{1, 0, 0, 1, 0}, {1, 1, 0, 1, 0}}));
  EXPECT_EQ(cf.I_set, (std::vector<std::size_t>{1}));
  EXPECT_EQ(cf.J_set, (std::vector<std::size_t>{3}));
  check_ccf_identities(cf);
  check_transfer_function(cf);

  const ControllerForm du = build_ccf(*doc.dual_generator);
  EXPECT_TRUE(du.A.is_zero());
  EXPECT_EQ(du.B, Mat::identity(f, 3));
  EXPECT_EQ(du.C, mat(f, {{0, 1, 0, 1, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 0, 1}}));
  EXPECT_EQ(du.D, mat(f, {{1, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 0, 0}}));
}

TEST(StateSpace, ConstantCodesAndRhat) {
  const CodeDocument doc = testing::binary_code();
  const ControllerForm cf = build_ccf(doc.generator);
  const Field& f = cf.field;
  EXPECT_EQ(c_const(cf), Subspace::span(f, 5, {{1, 1, 0, 1, 0}}));
  EXPECT_EQ(c_big(cf), Subspace::full(f, 5));
  EXPECT_EQ(r_hat(cf), 3u);

  const ControllerForm du = build_ccf(*doc.dual_generator);
  EXPECT_EQ(c_const(du).dim(), 0u);
  EXPECT_EQ(c_big(du), Subspace::span(f, 5, {{0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {1, 0, 0, 1, 0}}));
  check_block_duality(cf, du);
}

TEST(StateSpace, ConnectedPairSpaces) {
  const CodeDocument doc = testing::binary_code();
  const ControllerForm cf = build_ccf(doc.generator);
  const StateSpaces s = analyze(cf);
  EXPECT_EQ(s.delta.dim(), 4u);
  EXPECT_EQ(s.delta_perp, Subspace::span(cf.field, 6, {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}}));
  EXPECT_EQ(s.ker_phi.dim(), 0u);
  EXPECT_EQ(s.delta_minus.dim(), 2u);
  EXPECT_EQ(s.delta_star, s.delta);

  const StateSpaces sd = analyze(build_ccf(*doc.dual_generator));
  EXPECT_EQ(sd.r_hat, 1u);
  EXPECT_EQ(sd.ker_phi.dim(), 2u);
  EXPECT_EQ(sd.delta.dim(), 6u);
  EXPECT_EQ(sd.delta_star.dim(), 4u);
}

TEST(StateSpace, SuppliedComplementIsValidated) {
  const CodeDocument doc = testing::binary_code();
  const ControllerForm du = build_ccf(*doc.dual_generator);
  const StateSpaces sd = analyze(du);
  EXPECT_NO_THROW(analyze(du, sd.delta_star));
  EXPECT_THROW(analyze(du, sd.ker_phi), UsageError);
}

TEST(StateSpace, RejectsNonBasicAndNonMinimal) {
  const Field f = Field::prime(2);
  try {
    build_ccf(testing::poly_matrix(f, {{"1+z", "1+z^2"}}));
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("noncatastrophic"), std::string::npos);
  }
  EXPECT_THROW(build_ccf(testing::poly_matrix(f, {{"1+z+z^2", "1+z^2", "0"}, {"z^2", "z^2", "1"}})),
               UsageError);
}

TEST(StateSpace, BlockCode) {
  const Field f = Field::prime(3);
  const ControllerForm cf = build_ccf(testing::poly_matrix(f, {{"1", "0", "2"}, {"0", "1", "1"}}));
  EXPECT_EQ(cf.delta, 0u);
  const StateSpaces s = analyze(cf);
  EXPECT_EQ(s.c_const.dim(), 2u);
  EXPECT_EQ(s.r_hat, 0u);
}

}  // namespace
}  // namespace convmacw
