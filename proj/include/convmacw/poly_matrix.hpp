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

#include <climits>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convmacw/field.hpp"
#include "convmacw/linalg.hpp"

namespace convmacw {

/// Univariate polynomial over F_q in z, coefficient of z^i at index i.
class ZPoly {
 public:
  static constexpr int kNegInfDegree = INT_MIN;

  explicit ZPoly(Field field) : field_(std::move(field)) {}
  ZPoly(Field field, std::vector<Elem> coeffs);
  static ZPoly constant(Field field, Elem c);
  static ZPoly monomial(Field field, Elem c, std::size_t power);

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_zero() const { return c_.empty(); }
  /// kNegInfDegree for the zero polynomial.
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_nonzero_constant() const { return c_.size() == 1; }

  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator-() const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly scaled(Elem c) const;
  ZPoly shifted(std::size_t k) const;
  /// Euclidean division; throws DomainError when d is zero.
  void divmod(const ZPoly& d, ZPoly& quot, ZPoly& rem) const;

  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  /// "1+z+z^3" style; coefficients are element encodings for prime fields
  /// and digit lists "[d0,d1]" for extension fields.
  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Elem> c_;
};

/// k x n matrix over F_q[z].
class PolyMatrix {
 public:
  PolyMatrix(Field field, std::size_t rows, std::size_t cols);
  static PolyMatrix from_coefficients(const std::vector<Mat>& by_power);
  static PolyMatrix from_constant(const Mat& m);
  static PolyMatrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ZPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const ZPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  /// Maximal entry degree of row i (kNegInfDegree for a zero row).
  int row_degree(std::size_t i) const;
  int max_degree() const;
  /// Coefficient matrix of z^l.
  Mat coefficient(std::size_t l) const;
  /// Row i of the coefficient of z^l.
  Vec row_coefficient(std::size_t i, std::size_t l) const;

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_cols(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<ZPoly> e_;
};

struct CodeProfile {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::vector<std::size_t> forney;  // descending
  std::size_t r = 0;                // number of nonzero Forney indices

  friend bool operator==(const CodeProfile&, const CodeProfile&) = default;
  std::string to_string() const;
};

struct BasicnessReport {
  bool basic = false;
  bool full_rank = false;
  std::string diagnostic;
};

/// Triangularizes G by unimodular column operations: G U = [L | 0] with
/// L lower triangular. G is basic iff the diagonal of L consists of
/// nonzero constants.
BasicnessReport basicness(const PolyMatrix& g);
bool is_basic(const PolyMatrix& g);
/// Polynomial right inverse R (G R = I); nullopt for non-basic G.
std::optional<PolyMatrix> right_inverse(const PolyMatrix& g);
/// Maximal degree of the k x k minors. Throws UsageError when G is rank
/// deficient over F_q(z).
std::size_t code_degree(const PolyMatrix& g);
/// Determinant by cofactor expansion.
ZPoly determinant(const PolyMatrix& m);

struct MinimalityReport {
  bool minimal = false;
  std::vector<int> row_degrees;
  std::size_t degree = 0;
};
/// Throws UsageError for non-basic input.
MinimalityReport is_minimal(const PolyMatrix& g);
/// Forney indices and r of a minimal basic encoder.
CodeProfile code_profile(const PolyMatrix& g);

/// Row-reduces a basic encoder to a minimal one with rows sorted by
/// descending degree. Rejects non-basic input.
PolyMatrix make_minimal_basic(const PolyMatrix& g);
/// Minimal basic generator of the dual code.
PolyMatrix dual_generator(const PolyMatrix& g);
/// Whether the row modules of two basic encoders coincide.
bool same_code(const PolyMatrix& g1, const PolyMatrix& g2);

/// u G for a vector of polynomials u.
std::vector<ZPoly> encode(const std::vector<ZPoly>& u, const PolyMatrix& g);
/// Sum of Hamming weights of all coefficient vectors.
std::size_t codeword_weight(const std::vector<ZPoly>& v);

}  // namespace convmacw
