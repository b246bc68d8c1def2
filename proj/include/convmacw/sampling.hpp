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

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "convmacw/poly_matrix.hpp"

namespace convmacw {

/// Rejection sampler: row i gets entries of degree <= row_degrees[i] with a
/// nonzero z^row_degrees[i] coefficient somewhere in the row; the first draw
/// that is basic and minimal is returned. nullopt after `tries` failures.
std::optional<PolyMatrix> random_minimal_encoder(const Field& field, std::size_t n,
                                                 const std::vector<std::size_t>& row_degrees,
                                                 std::mt19937_64& rng, std::size_t tries = 200);

/// Random Forney indices summing to delta, then random_minimal_encoder.
std::optional<PolyMatrix> random_code(const Field& field, std::size_t n, std::size_t k,
                                      std::size_t delta, std::mt19937_64& rng,
                                      std::size_t tries = 200);

/// Random full-rank k x n matrix over F_q.
Mat random_full_rank(const Field& field, std::size_t k, std::size_t n, std::mt19937_64& rng);

/// Random invertible d x d matrix.
Mat random_invertible(const Field& field, std::size_t d, std::mt19937_64& rng);

}  // namespace convmacw
