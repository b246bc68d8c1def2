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
#include <string>
#include <vector>

#include "convmacw/cyclo.hpp"
#include "convmacw/field.hpp"

namespace convmacw {

/// Integer polynomial in W, coefficient of W^j at index j. Trailing zeros
/// are trimmed, so the empty vector is the zero polynomial, which is also
/// the weight enumerator of the empty set.
class WePoly {
 public:
  WePoly() = default;
  explicit WePoly(std::vector<std::int64_t> coeffs);
  static WePoly monomial(std::int64_t c, std::size_t j);

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  std::int64_t coeff(std::size_t j) const { return j < c_.size() ? c_[j] : 0; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coefficient_sum() const;

  WePoly& operator+=(const WePoly& o);
  WePoly operator+(const WePoly& o) const;
  WePoly operator-(const WePoly& o) const;
  WePoly operator*(std::int64_t s) const;
  WePoly operator*(const WePoly& o) const;

  friend bool operator==(const WePoly&, const WePoly&) = default;
  friend auto operator<=>(const WePoly&, const WePoly&) = default;

  /// "1 + 2W^2 + W^5"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// Polynomial in W with exact rational coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly from_we(const WePoly& w);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const Rational& s) const;
  RatPoly& operator+=(const RatPoly& o);

  bool is_integral() const;
  /// Throws IdentityViolation unless every coefficient is an integer that
  /// fits in 64 bits.
  WePoly to_we() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Weight enumerator of offset + span(basis), by enumerating all points.
WePoly we_of_affine(const Field& field, const Vec& offset, const std::vector<Vec>& basis,
                    std::size_t n);

/// Block MacWilliams transform
/// H(f) = sum_j f_j (1 - W)^j (1 + (q-1)W)^(n-j). Throws UsageError when
/// deg f > n; the integer version throws GuardExceeded on 64-bit overflow.
WePoly macwilliams_H(const WePoly& f, std::size_t n, std::uint32_t q);
RatPoly macwilliams_H(const RatPoly& f, std::size_t n, std::uint32_t q);
CycloPoly macwilliams_H(const CycloPoly& f, std::size_t n);

/// (1 + (q-1)W)^n as a weight enumerator, i.e. we(F_q^n).
WePoly full_space_we(std::size_t n, std::uint32_t q);

}  // namespace convmacw
