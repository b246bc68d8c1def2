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

#include <gmpxx.h>

namespace convmacw {

using Rational = mpq_class;

/// Element of Q(zeta_p) in the basis 1, zeta, ..., zeta^(p-2).
///
/// zeta^(p-1) is always rewritten as -(1 + zeta + ... + zeta^(p-2)), so the
/// coefficient vector is unique. For p = 2 the single coefficient is the
/// value itself (zeta = -1).
class CycloNum {
 public:
  explicit CycloNum(std::uint32_t p);
  static CycloNum from_rational(std::uint32_t p, const Rational& r);
  /// Build from coefficients on 1, zeta, ..., zeta^(p-1) (length p), reducing.
  static CycloNum from_power_sums(std::uint32_t p, const std::vector<Rational>& by_power);

  std::uint32_t p() const { return p_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Coefficient of 1; the value itself when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator*(const Rational& r) const;
  CycloNum& operator+=(const CycloNum& o);
  /// Multiply by zeta^k.
  CycloNum times_root(std::uint32_t k) const;

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::vector<Rational> c_;
};

/// Canonical representation of zeta^k, k taken mod p.
CycloNum root_power(std::uint32_t p, std::uint64_t k);
/// Throws UsageError when the characteristics differ.
CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b);

/// Polynomial in W with coefficients in Q(zeta_p), standing for
/// q^(scale_pow/2) times the stored polynomial.
struct CycloPoly {
  std::uint32_t p = 2;
  std::uint32_t q = 2;
  int scale_pow = 0;
  std::vector<CycloNum> coeffs;  // trimmed; empty means zero

  static CycloPoly zero(std::uint32_t p, std::uint32_t q) { return CycloPoly{p, q, 0, {}}; }

  void trim();
  bool is_zero() const { return coeffs.empty(); }
  bool is_rational() const;
  /// Same value at a different scale. Throws when the scale difference is
  /// odd and q is not a square, since the value would leave Q(zeta_p).
  CycloPoly rescaled(int new_scale_pow) const;
  /// Rational coefficients of the actual value q^(scale_pow/2) * stored.
  /// Throws IdentityViolation unless rational.
  std::vector<Rational> to_rational() const;

  friend bool operator==(const CycloPoly& a, const CycloPoly& b);
};

}  // namespace convmacw
