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

#include <cstddef>
#include <optional>
#include <vector>

#include "convmacw/linalg.hpp"
#include "convmacw/poly_matrix.hpp"

namespace convmacw {

/// Controller canonical form (A, B, C, D) of a minimal basic encoder.
///
/// Rows of the encoder are reordered (stably) so that the rows of positive
/// degree come first; `row_order[i]` is the input row placed at position i.
/// A is block diagonal with one upper shift block per positive-degree row,
/// row i <= r of B carries a 1 at the first position of block i, the rows
/// of C are the coefficients g_{i,1..delta_i} and D = G(0).
struct ControllerForm {
  Field field;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::size_t r = 0;
  Mat A, B, C, D;
  CodeProfile profile;
  PolyMatrix encoder;                   // rows in CCF order
  std::vector<std::size_t> row_order;   // CCF row -> input row
  std::vector<std::size_t> row_degrees; // CCF order
  std::vector<std::size_t> I_set;       // 1-based first positions of the blocks
  std::vector<std::size_t> J_set;       // 1-based last positions of the blocks
};

/// Builds the form and checks the structural identities and the transfer
/// function G(z) = B sum_{l>=1} z^l A^(l-1) C + D coefficientwise
/// (IdentityViolation on failure). Rejects non-basic or non-minimal input.
ControllerForm build_ccf(const PolyMatrix& g);

/// A B^t = 0, B B^t = diag(I_r, 0), diagonals of B^tB, A^tA, AA^t against
/// the index sets, A^tA + B^tB = I. Throws IdentityViolation.
void check_ccf_identities(const ControllerForm& cf);
/// Rebuilds G from the form and compares coefficientwise.
void check_transfer_function(const ControllerForm& cf);

/// (ker B) D, cross-checked against the span of the degree-0 rows.
Subspace c_const(const ControllerForm& cf);
/// Row space of [C; D].
Subspace c_big(const ControllerForm& cf);
/// dim C_C - k.
std::size_t r_hat(const ControllerForm& cf);

/// [I A; 0 B] row space in F^(2 delta).
Subspace delta_space(const ControllerForm& cf);
/// Orthogonal of Delta, computed generically and from the explicit
/// parametrization {(X, -XA) : X_j = 0 for j in J}; both must agree.
Subspace delta_perp(const ControllerForm& cf);
/// The 2delta x n matrix [C; B^t D] so that phi(X, Y) = (X, Y) * phi_matrix.
Mat phi_matrix(const ControllerForm& cf);
Vec phi(const ControllerForm& cf, const Vec& x, const Vec& y);
/// {(X, Y) in Delta : phi(X, Y) in C_const}.
Subspace ker_phi_hom(const ControllerForm& cf);
/// span{(0, e_i) : i not in I}.
Subspace delta_minus(const ControllerForm& cf);

/// All subspaces attached to one code, with their dimension checks.
struct StateSpaces {
  Subspace c_const;
  Subspace c_big;
  std::size_t r_hat = 0;
  Mat phi;
  Subspace delta;
  Subspace delta_perp;
  Subspace ker_phi;
  Subspace ker_phi_perp;
  Subspace delta_minus;
  Subspace delta_star;
};

/// Computes every space and asserts: dim C_const = k - r, dim Delta = delta + r,
/// dim ker Phi = delta - r_hat, im D = im B^tD (+) C_const,
/// phi(Delta) + C_const = C_C, Delta (+) Delta^- = F and
/// Delta* (+) ker Phi (+) Delta^- = F. When `delta_star` is given it must be
/// a complement of ker Phi inside Delta; otherwise the deterministic
/// complement in state-index order is used.
StateSpaces analyze(const ControllerForm& cf, std::optional<Subspace> delta_star = std::nullopt);

/// Block-code duality between a code and its dual: (C_C)^perp = dual C_const,
/// (dual C_C)^perp = C_const, im D = ker Dhat^t and r_hat = dual r.
void check_block_duality(const ControllerForm& cf, const ControllerForm& dual);

}  // namespace convmacw
