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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convmacw/field.hpp"

namespace convmacw {

/// Dense row-major matrix over F_q. Vectors act on the left: v -> vM.
class Mat {
 public:
  Mat(Field field, std::size_t rows, std::size_t cols);
  static Mat identity(Field field, std::size_t n);
  static Mat from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);
  /// Scalar multiple of the identity.
  static Mat scalar(Field field, std::size_t n, Elem a);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  std::vector<Vec> row_list() const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator-() const;
  bool is_zero() const;

  /// [this; o]
  Mat vstack(const Mat& o) const;
  /// [this | o]
  Mat hstack(const Mat& o) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Nested integer lists of element encodings.
  std::vector<std::vector<std::uint32_t>> to_nested() const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

Vec vec_mat(const Field& f, const Vec& v, const Mat& m);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_neg(const Field& f, const Vec& a);
Vec vec_scale(const Field& f, Elem c, const Vec& a);
Vec vec_concat(const Vec& a, const Vec& b);
Elem dot(const Field& f, const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
std::size_t hamming_weight(const Vec& v);

struct RrefResult {
  Mat reduced;  // same shape as input, zero rows at the bottom
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis (RREF rows) of {u : u M = 0}.
Mat left_kernel(const Mat& m);
/// Inverse of a square matrix, nullopt when singular.
std::optional<Mat> inverse(const Mat& m);
/// Coefficients c with c * basis = v, nullopt if v is outside the row space.
std::optional<Vec> solve_left(const Mat& basis, const Vec& v);

/// A subspace of F_q^n kept as its unique RREF basis, so equality of
/// subspaces is equality of data.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& m);
  static Subspace full(Field field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const { return basis_.row_list(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Orthogonal complement under the canonical bilinear form.
  Subspace perp() const;
  /// { v M : v in this }.
  Subspace image(const Mat& m) const;
  /// { v in this : v M in target }.
  Subspace preimage(const Mat& m, const Subspace& target) const;
  /// Deterministic direct complement of `inner` inside this space: elements
  /// are scanned in state-index order and kept when they enlarge the span.
  Subspace complement_of(const Subspace& inner) const;

  /// Visits all q^dim elements, in order of their coefficient vectors.
  void for_each(const std::function<void(const Vec&)>& fn) const;
  std::vector<Vec> elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(std::size_t ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}
  std::size_t ambient_;
  Mat basis_;
};

/// True iff U ∩ V = {0}.
bool trivially_intersect(const Subspace& u, const Subspace& v);

}  // namespace convmacw
