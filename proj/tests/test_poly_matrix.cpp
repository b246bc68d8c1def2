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

#include "convmacw/errors.hpp"
#include "convmacw/poly_matrix.hpp"
#include "convmacw/sampling.hpp"
#include "test_util.hpp"

namespace convmacw {
namespace {

using testing::poly_matrix;

TEST(ZPoly, ArithmeticAndPrinting) {
  const Field f = Field::prime(3);
  const ZPoly a = parse_polynomial("1+2z", f);
  const ZPoly b = parse_polynomial("2+z^2", f);
  EXPECT_EQ((a * b).to_string(), "2+z+z^2+2z^3");
  EXPECT_EQ((a + b).to_string(), "2z+z^2");
  EXPECT_EQ((a - a).degree(), ZPoly::kNegInfDegree);
  ZPoly quot(f), rem(f);
  (a * b).divmod(b, quot, rem);
  EXPECT_EQ(quot, a);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_THROW(a.divmod(ZPoly(f), quot, rem), DomainError);
}

TEST(PolyMatrix, BinaryCodeProfile) {
  const CodeDocument doc = testing::binary_code();
  EXPECT_TRUE(is_basic(doc.generator));
  const MinimalityReport m = is_minimal(doc.generator);
  EXPECT_TRUE(m.minimal);
  EXPECT_EQ(m.degree, 3u);
  EXPECT_EQ(code_degree(doc.generator), 3u);
  EXPECT_EQ(code_profile(doc.generator).to_string(), "(5,2,3), indices (3,0), r=1");
}

TEST(PolyMatrix, DualGeneratorMatchesPrintedDual) {
  const CodeDocument doc = testing::binary_code();
  const PolyMatrix gd = dual_generator(doc.generator);
  EXPECT_TRUE((gd * doc.generator.transpose()).is_zero());
  EXPECT_TRUE(same_code(gd, *doc.dual_generator));
  EXPECT_EQ(code_profile(gd).forney, (std::vector<std::size_t>{1, 1, 1}));
  // Dual of the dual is the original code.
  EXPECT_TRUE(same_code(dual_generator(gd), doc.generator));

  const CodeDocument d510 = testing::ternary_code();
  const PolyMatrix gd510 = dual_generator(d510.generator);
  EXPECT_EQ(gd510.rows(), 1u);
  EXPECT_TRUE(same_code(gd510, *d510.dual_generator));
}

TEST(PolyMatrix, BasicnessDiagnostics) {
  const Field f = Field::prime(2);
  // (1+z, 1+z^2) has the common factor 1+z.
  const PolyMatrix cat = poly_matrix(f, {{"1+z", "1+z^2"}});
  EXPECT_FALSE(is_basic(cat));
  EXPECT_FALSE(basicness(cat).diagnostic.empty());
  EXPECT_FALSE(right_inverse(cat));
  // z times a basic row is not delay-free.
  EXPECT_FALSE(is_basic(poly_matrix(f, {{"z", "z+z^2"}})));
  const PolyMatrix ok = poly_matrix(f, {{"1+z+z^2", "1+z^2"}});
  const auto r = right_inverse(ok);
  ASSERT_TRUE(r);
  EXPECT_EQ(ok * *r, PolyMatrix::identity(f, 1));
}

TEST(PolyMatrix, MinimalityAndReduction) {
  const Field f = Field::prime(2);
  // Basic but row degrees 2 + 2 exceed the degree 2 of the code.
  const PolyMatrix g = poly_matrix(f, {{"1+z+z^2", "1+z^2", "0"}, {"z^2", "z^2", "1"}});
  ASSERT_TRUE(is_basic(g));
  EXPECT_FALSE(is_minimal(g).minimal);
  const PolyMatrix m = make_minimal_basic(g);
  EXPECT_TRUE(is_minimal(m).minimal);
  EXPECT_TRUE(same_code(m, g));
  EXPECT_EQ(code_profile(m).delta, code_degree(g));
}

TEST(PolyMatrix, EncodeWeights) {
  const CodeDocument doc = testing::binary_code();
  const Field& f = doc.generator.field();
  const std::vector<ZPoly> u = {ZPoly::constant(f, 1), ZPoly(f)};
  const auto v = encode(u, doc.generator);
  EXPECT_EQ(codeword_weight(v), 7u);
}

TEST(PolyMatrix, RandomEncodersAreMinimalBasic) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u}) {
    const Field f = Field::prime(p);
    for (int t = 0; t < 20; ++t) {
      const auto g = random_code(f, 4, 2, 2, rng);
      ASSERT_TRUE(g);
      EXPECT_TRUE(is_minimal(*g).minimal);
      EXPECT_EQ(code_profile(*g).delta, 2u);
      const PolyMatrix gd = dual_generator(*g);
      EXPECT_TRUE((gd * g->transpose()).is_zero());
      EXPECT_EQ(code_profile(gd).delta, 2u);
    }
  }
}

}  // namespace
}  // namespace convmacw
