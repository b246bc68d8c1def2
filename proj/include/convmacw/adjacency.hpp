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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convmacw/state_space.hpp"
#include "convmacw/weight.hpp"

namespace convmacw {

inline constexpr std::uint64_t kDefaultLimit = std::uint64_t{1} << 24;

/// Sparse q^delta x q^delta matrix of weight enumerators indexed by state
/// indices; missing entries are zero.
class AdjMatrix {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  AdjMatrix() = default;
  AdjMatrix(std::size_t delta, std::uint32_t q, std::size_t n);

  std::size_t delta() const { return delta_; }
  std::uint32_t q() const { return q_; }
  std::size_t n() const { return n_; }
  /// q^delta.
  std::uint32_t dim() const { return dim_; }

  const WePoly& at(std::uint32_t row, std::uint32_t col) const;
  /// Stores w, erasing the entry when w is zero.
  void set(std::uint32_t row, std::uint32_t col, WePoly w);
  void add(std::uint32_t row, std::uint32_t col, const WePoly& w);
  const std::map<Key, WePoly>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  AdjMatrix transpose() const;
  /// All q^(2 delta) entries (zeros included), sorted.
  std::vector<WePoly> sorted_entries() const;

  friend bool operator==(const AdjMatrix&, const AdjMatrix&) = default;

  /// Aligned rows of entries, "0" for missing ones.
  std::string to_text() const;

 private:
  std::size_t delta_ = 0;
  std::uint32_t q_ = 2;
  std::size_t n_ = 0;
  std::uint32_t dim_ = 1;
  std::map<Key, WePoly> entries_;
};

/// Enumerates every state X and input u; guard q^(2 delta) * q^k <= limit.
AdjMatrix adjacency_bruteforce(const ControllerForm& cf, std::uint64_t limit = kDefaultLimit);
/// Iterates over Delta only and uses lambda = we(phi + C_const); guard
/// q^(delta + r) * q^(k - r) <= limit.
AdjMatrix adjacency_fast(const ControllerForm& cf, std::uint64_t limit = kDefaultLimit);

/// Invertible P together with its state permutation X -> XP.
struct StatePermutation {
  Mat P;
  std::vector<std::uint32_t> image;    // index(X) -> index(XP)
  std::vector<std::uint32_t> preimage; // index(XP) -> index(X)
};

/// Throws UsageError for singular or non-square P.
StatePermutation make_state_permutation(const Mat& P);
/// Entry (X, Y) of the result is Lambda_{XP, YP}.
AdjMatrix conjugate(const AdjMatrix& lambda, const StatePermutation& perm);
/// 0/1 matrix with a 1 at (X, XP).
std::vector<std::vector<int>> permutation_matrix(const StatePermutation& perm);

struct EntrySums {
  WePoly over_delta_star;
  WePoly over_all;
};
EntrySums entry_sums(const AdjMatrix& lambda, const Subspace& delta_star);
/// Asserts sum over Delta* = we(C_C) and sum over F = q^(delta - r_hat) we(C_C).
EntrySums check_entry_sums(const AdjMatrix& lambda, const ControllerForm& cf,
                           const StateSpaces& s);

/// Support equals Delta, coefficient sums equal q^(k-r), invariance along
/// ker Phi and under scalar conjugation. Throws IdentityViolation.
void check_adjacency_structure(const AdjMatrix& lambda, const ControllerForm& cf,
                               const StateSpaces& s);

std::uint64_t pgl_candidate_count(std::uint32_t q, std::size_t delta);
/// Visits invertible delta x delta matrices whose first nonzero entry in
/// row-major order is 1, in lexicographic order of their row-major entry
/// codes, until fn returns false. Guard: q^(delta^2) <= limit.
void for_each_pgl_representative(const Field& field, std::size_t delta,
                                 const std::function<bool(const Mat&)>& fn,
                                 std::uint64_t limit = kDefaultLimit);

/// First P (in projective enumeration order) with a = conjugate(b, P).
std::optional<Mat> find_conjugating_matrix(const AdjMatrix& a, const AdjMatrix& b,
                                           const Field& field,
                                           std::uint64_t limit = kDefaultLimit);

}  // namespace convmacw
