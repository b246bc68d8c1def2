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

#include "convmacw/sampling.hpp"

#include <algorithm>

#include "convmacw/errors.hpp"
#include "convmacw/linalg.hpp"

namespace convmacw {

namespace {

Elem draw(const Field& f, std::mt19937_64& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(0, f.q() - 1)(rng));
}

}  // namespace

std::optional<PolyMatrix> random_minimal_encoder(const Field& field, std::size_t n,
                                                 const std::vector<std::size_t>& row_degrees,
                                                 std::mt19937_64& rng, std::size_t tries) {
  const std::size_t k = row_degrees.size();
  if (k == 0 || k > n) throw UsageError("need 1 <= k <= n");
  for (std::size_t attempt = 0; attempt < tries; ++attempt) {
    PolyMatrix g(field, k, n);
    bool degrees_ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> c(row_degrees[i] + 1);
        for (auto& e : c) e = draw(field, rng);
        g.at(i, j) = ZPoly(field, std::move(c));
      }
      if (g.row_degree(i) != static_cast<int>(row_degrees[i])) degrees_ok = false;
    }
    if (!degrees_ok || !is_basic(g)) continue;
    if (is_minimal(g).minimal) return g;
  }
  return std::nullopt;
}

std::optional<PolyMatrix> random_code(const Field& field, std::size_t n, std::size_t k,
                                      std::size_t delta, std::mt19937_64& rng, std::size_t tries) {
  if (k == 0) throw UsageError("need k >= 1");
  std::vector<std::size_t> deg(k, 0);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t i = 0; i < delta; ++i) ++deg[pick(rng)];
  std::sort(deg.rbegin(), deg.rend());
  return random_minimal_encoder(field, n, deg, rng, tries);
}

Mat random_full_rank(const Field& field, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  if (k > n) throw UsageError("need k <= n");
  while (true) {
    Mat m(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = draw(field, rng);
    }
    if (rank(m) == k) return m;
  }
}

Mat random_invertible(const Field& field, std::size_t d, std::mt19937_64& rng) {
  return random_full_rank(field, d, d, rng);
}

}  // namespace convmacw
