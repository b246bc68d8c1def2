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
#include <string>
#include <vector>

#include "convmacw/adjacency.hpp"
#include "convmacw/cyclo.hpp"
#include "convmacw/state_space.hpp"
#include "convmacw/weight.hpp"

namespace convmacw {

/// Unnormalized MacWilliams matrix q^(delta/2) H(P): entry (X, Y) is
/// zeta^(d * tau(XP . Y)) where zeta^d is the chosen primitive p-th root.
/// Only exponents in [0, p) are stored; the represented matrix carries the
/// factor q^(scale_pow / 2) with scale_pow = -delta.
class MacWMatrix {
 public:
  /// Throws UsageError when P is singular or zeta_exponent is not in [1, p).
  static MacWMatrix build(const Field& field, std::size_t delta, const Mat& P,
                          std::uint32_t zeta_exponent = 1);
  static MacWMatrix identity(const Field& field, std::size_t delta,
                             std::uint32_t zeta_exponent = 1);

  std::size_t delta() const { return delta_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t dim() const { return dim_; }
  int scale_pow() const { return -static_cast<int>(delta_); }
  std::uint32_t zeta_exponent() const { return zeta_exp_; }
  const Mat& P() const { return P_; }

  std::uint8_t exponent(std::uint32_t x, std::uint32_t y) const { return e_[x * dim_ + y]; }
  CycloNum entry(std::uint32_t x, std::uint32_t y) const;

  /// Row-permuted copy: entry (X, Y) of the result is entry (perm[X], Y).
  MacWMatrix permuted_rows(const std::vector<std::uint32_t>& perm, const Mat& new_P) const;
  /// Column-permuted copy: entry (X, Y) of the result is entry (X, perm[Y]).
  MacWMatrix permuted_cols(const std::vector<std::uint32_t>& perm, const Mat& new_P) const;

  friend bool operator==(const MacWMatrix& a, const MacWMatrix& b) {
    return a.p_ == b.p_ && a.dim_ == b.dim_ && a.e_ == b.e_;
  }

 private:
  MacWMatrix(Mat P) : P_(std::move(P)) {}
  std::size_t delta_ = 0;
  std::uint32_t p_ = 2;
  std::uint32_t q_ = 2;
  std::uint32_t dim_ = 1;
  std::uint32_t zeta_exp_ = 1;
  Mat P_;
  std::vector<std::uint8_t> e_;
};

/// Asserts on the unnormalized matrices: H(I) symmetric, H^2 = q^delta P(-I),
/// H^4 = q^(2 delta) I, and for every P in `samples`
/// H(P) = P(P) H = H P((P^t)^-1) and H(P)^-1 = H(-P^t).
/// Throws IdentityViolation; GuardExceeded when q^delta > limit.
void check_macw_identities(const Field& field, std::size_t delta, std::uint32_t zeta_exponent,
                           const std::vector<Mat>& samples, std::uint64_t limit = 1u << 12);

/// Dense q^delta x q^delta grid of rational-coefficient polynomials.
struct RatGrid {
  std::uint32_t dim = 1;
  std::vector<RatPoly> cells;
  const RatPoly& at(std::uint32_t x, std::uint32_t y) const { return cells[x * dim + y]; }
  friend bool operator==(const RatGrid&, const RatGrid&) = default;
};

/// (L M R)_{X,Y} with L, R unnormalized MacWilliams matrices and M sparse,
/// normalized by q^(-delta). Each entry is accumulated over Q(zeta_p) and
/// must collapse to rationals (IdentityViolation otherwise).
RatGrid sandwich(const MacWMatrix& left, const AdjMatrix& m, const MacWMatrix& right);

struct DualityOptions {
  std::uint64_t limit = kDefaultLimit;
  std::uint32_t zeta_exponent = 1;
};

/// Everything both sides of the identity need, computed once.
struct DualPair {
  ControllerForm cf;
  ControllerForm dual;
  StateSpaces spaces;
  StateSpaces dual_spaces;
  AdjMatrix lambda;
  AdjMatrix lambda_hat;
  MacWMatrix h;      // H(I)
  MacWMatrix h_inv;  // P(-I) H, built structurally
  RatGrid ell;       // H Lambda H
  RatGrid gamma;     // H Lambda^t H^-1
  AdjMatrix ell_transformed;    // q^-k H(ell_{X,Y})
  AdjMatrix transformed;        // q^-k H(gamma_{X,Y})
  DualityOptions options;
};

/// Builds both controller forms, state spaces and adjacency matrices, the
/// ell and Gamma matrices with their cross-checks, and the transforms.
/// `dual_generator` must generate the dual code when given; otherwise the
/// dual is computed.
DualPair prepare_dual_pair(const PolyMatrix& g, const std::optional<PolyMatrix>& dual_generator,
                           const DualityOptions& options = {});

/// H Lambda H, computed by the direct triple product and by the three-case
/// closed form; both must agree, and ell must be invariant under
/// translation by Delta^perp.
RatGrid ell_matrix(const AdjMatrix& lambda, const ControllerForm& cf, const StateSpaces& s,
                   const MacWMatrix& h);
/// The three-case closed form alone.
RatGrid ell_closed_form(const AdjMatrix& lambda, const ControllerForm& cf, const StateSpaces& s);
/// H Lambda^t H^-1 with H^-1 = P(-I) H.
RatGrid gamma_matrix(const AdjMatrix& lambda, const MacWMatrix& h, const MacWMatrix& h_inv);
/// q^-k H applied entrywise; entries must be integral.
AdjMatrix transformed_matrix(const RatGrid& grid, std::size_t delta, std::uint32_t q,
                             std::size_t n, std::size_t k);

/// Case census and values of q^-k H(ell): zero off (ker Phi)^perp,
/// we(dual C_const) on Delta^perp, and (we<dual C_const, c> - we(dual C_const))/(q-1)
/// for every admissible c elsewhere.
void check_ell_transform_cases(const DualPair& dp);

/// Recomputes Gamma for every other primitive root and compares.
void check_zeta_independence(const DualPair& dp);

/// [[Chat C^t, Chat (B^t D)^t], [Bhat^t Dhat C^t, 0]].
Mat matrix_M(const ControllerForm& cf, const ControllerForm& dual);
/// Image, kernel, intersection, injectivity and rank statements about M.
void check_matrix_M(const Mat& M, const DualPair& dp);
/// lambda_hat_{X,Y} = q^-k H(ell_{(X,Y)M}) on the dual Delta; returns the
/// number of comparisons.
std::size_t check_ell_transport(const Mat& M, const DualPair& dp);

struct WeakIdentityResult {
  Mat f;
  std::size_t comparisons = 0;  // state pairs, both forms checked at each
  std::size_t mismatches = 0;
  bool multiset_equal = false;
};
/// f = f0 (+) f1 (+) f2 with f0 induced by M and f1, f2 matching RREF
/// bases; checks both pointwise forms over all of F and multiset equality.
WeakIdentityResult weak_identity_check(const DualPair& dp,
                                       const std::optional<Subspace>& dual_delta_star = std::nullopt);

/// Number of positions (X, Y) where lambda_hat_{X,Y} differs from
/// transformed_{XP,YP}.
std::size_t witness_mismatches(const DualPair& dp, const Mat& P);

struct TheoremResult {
  Mat witness;
  std::size_t mismatches = 0;
  std::size_t comparisons = 0;
};
/// Requires r_hat = delta (PreconditionError otherwise).
TheoremResult theorem_q(const DualPair& dp);
/// Requires r = delta (PreconditionError otherwise).
TheoremResult theorem_p(const DualPair& dp);

struct SearchResult {
  std::optional<Mat> witness;
  std::uint64_t candidates_tried = 0;
  std::uint64_t representatives = 0;  // total projective representatives visited
  bool exhausted = false;
};
/// Projective representatives in lexicographic order; stops at the first
/// witness.
SearchResult conjecture_search(const DualPair& dp, std::uint64_t limit = kDefaultLimit);

/// delta = 1 only: the matrix form with P = I, the per-entry formulas and
/// q^-k H(ell_{-Y,X}) all agree with lambda_hat. Returns mismatches.
std::size_t unit_memory_check(const DualPair& dp);

/// delta = 0 check: q^-k H(we(C)) = we(C^perp) with C^perp enumerated by brute force.
bool block_macwilliams_check(const Mat& generator);

enum class VerifyMode { Auto, Weak, TheoremQ, TheoremP, Search, UnitMemory };
VerifyMode parse_verify_mode(const std::string& s);

struct DualityReport {
  CodeProfile profile;
  CodeProfile dual_profile;
  std::size_t r_hat = 0;
  std::string theorem_used;  // delta=0 | delta=1 | r_hat=delta | r=delta | conjecture-search | multiset-only
  std::optional<Mat> witness;
  std::string verdict;       // verified | counterexample-candidate | witness-rejected
  std::size_t entry_mismatch_count = 0;
  std::vector<std::string> checks;
  std::uint64_t search_candidates = 0;
  double elapsed_ms = 0;
};

/// Dispatches per mode. Auto: delta = 1 runs the unit-memory formulas and
/// the theorem route, r_hat = delta theorem_q (with theorem_p agreement when
/// r = delta too), r = delta theorem_p, otherwise the weak identity and the
/// search. A supplied witness is checked in addition.
DualityReport verify(const DualPair& dp, VerifyMode mode,
                     const std::optional<Mat>& check_witness = std::nullopt);

}  // namespace convmacw
