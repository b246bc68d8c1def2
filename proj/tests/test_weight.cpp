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

#include "convmacw/cyclo.hpp"
#include "convmacw/errors.hpp"
#include "convmacw/weight.hpp"
#include "test_util.hpp"

namespace convmacw {
namespace {

TEST(Cyclo, RootsOfUnity) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    EXPECT_EQ(root_power(p, p), CycloNum::from_rational(p, 1));
    CycloNum sum(p);
    for (std::uint32_t k = 0; k < p; ++k) sum += root_power(p, k);
    EXPECT_TRUE(sum.is_zero());
    EXPECT_EQ(root_power(p, 1) * root_power(p, p - 1), CycloNum::from_rational(p, 1));
    EXPECT_FALSE(p > 2 && root_power(p, 1).is_rational());
  }
  EXPECT_EQ(root_power(2, 1), CycloNum::from_rational(2, -1));
  EXPECT_THROW(cyclo_mul(CycloNum(2), CycloNum(3)), UsageError);
}

TEST(Cyclo, GaussSumSquare) {
  // For p = 3, (sum_x zeta^(x^2))^2 = -3.
  CycloNum g(3);
  for (std::uint32_t x = 0; x < 3; ++x) g += root_power(3, x * x);
  EXPECT_EQ(g * g, CycloNum::from_rational(3, -3));
}

TEST(Weight, PolyBasics) {
  const WePoly a({1, 0, 2});
  const WePoly b = WePoly::monomial(3, 1);
  EXPECT_EQ((a + b).to_string(), "1 + 3W + 2W^2");
  EXPECT_EQ(WePoly().to_string(), "0");
  EXPECT_EQ(a.coefficient_sum(), 3);
  EXPECT_EQ(WePoly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(testing::we("1+W^3"), WePoly({1, 0, 0, 1}));
  EXPECT_EQ(testing::we("W^2+W^5"), WePoly({0, 0, 1, 0, 0, 1}));
}

TEST(Weight, AffineEnumerator) {
  const Field f = Field::prime(2);
  EXPECT_EQ(we_of_affine(f, Vec{1, 0, 0}, {}, 3), WePoly({0, 1}));
  EXPECT_EQ(we_of_affine(f, Vec{0, 0, 0}, {{1, 1, 1}}, 3), WePoly({1, 0, 0, 1}));
  EXPECT_EQ(we_of_affine(f, Vec{1, 0, 0}, {{1, 1, 1}}, 3), WePoly({0, 1, 1}));
  EXPECT_EQ(full_space_we(3, 3), WePoly({1, 6, 12, 8}));
}

TEST(Weight, TransformMatchesPointEvaluation) {
  const std::vector<WePoly> samples = {WePoly({1}), WePoly({1, 0, 0, 1}), WePoly({0, 2, 5, 1}),
                                       WePoly({3, 0, 0, 0, 7})};
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (const WePoly& w : samples) {
      const std::size_t n = 5;
      const WePoly h = macwilliams_H(w, n, q);
      for (long x = -3; x <= 3; ++x) EXPECT_EQ(testing::eval(h, x), testing::eval_H(w, n, q, x));
      // H^2 = q^n.
      EXPECT_EQ(macwilliams_H(h, n, q), w * static_cast<std::int64_t>(checked_power(q, n)));
      EXPECT_EQ(macwilliams_H(RatPoly::from_we(w), n, q), RatPoly::from_we(h));
    }
  }
  EXPECT_THROW(macwilliams_H(WePoly({0, 0, 0, 1}), 2, 2), UsageError);
}

TEST(Weight, RatPolyIntegrality) {
  const RatPoly r({Rational(1, 2), Rational(3)});
  EXPECT_FALSE(r.is_integral());
  EXPECT_THROW(r.to_we(), IdentityViolation);
  EXPECT_EQ((r * Rational(2)).to_we(), WePoly({1, 6}));
}

}  // namespace
}  // namespace convmacw
