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
#include <memory>
#include <span>
#include <vector>

namespace convmacw {

/// Field element of F_q identified by its canonical integer encoding
/// enc(a) = sum digits[i] * p^i, where digits are the coefficients of the
/// residue-class representative, constant term first.
using Elem = std::uint32_t;

/// Vector over F_q (row vector convention throughout).
using Vec = std::vector<Elem>;

/// Declaration of F_q, q = p^s. `modulus` is the monic irreducible defining
/// polynomial (constant term first, length s+1) and is empty iff s == 1.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t s = 1;
  std::vector<std::uint32_t> modulus;
  std::uint32_t q = 2;

  static FieldSpec prime(std::uint32_t p);
  static FieldSpec extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Arithmetic in F_q. Cheap to copy; all copies share immutable tables.
///
/// Construction validates the declaration: p prime, q <= 2^16, and for s > 1
/// a monic modulus of degree s that is irreducible over F_p (checked by
/// trial division against every monic polynomial of degree <= s/2).
class Field {
 public:
  explicit Field(const FieldSpec& spec);
  static Field prime(std::uint32_t p) { return Field(FieldSpec::prime(p)); }

  const FieldSpec& spec() const;
  std::uint32_t p() const;
  std::uint32_t s() const;
  std::uint32_t q() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws DomainError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// tau(a) = sum_{i<s} a^{p^i}, returned as a residue in [0, p).
  std::uint32_t trace(Elem a) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long c) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || a.spec() == b.spec();
  }

 private:
  struct Tables;
  std::shared_ptr<const Tables> t_;
};

/// An element bundled with its field, for the checked public arithmetic.
class FieldElement {
 public:
  /// Throws UsageError if value >= q.
  FieldElement(Field field, Elem value);
  static FieldElement from_digits(Field field, std::span<const std::uint32_t> digits);

  const Field& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> digits() const { return field_.digits(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  Field field_;
  Elem value_;
};

/// Throw UsageError when the operands live in different fields.
FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
/// Throws DomainError for zero.
FieldElement field_inv(const FieldElement& a);
std::uint32_t trace(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return field_add(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return field_mul(a, b);
}

// State ordering. Vectors in F_q^d are ordered lexicographically with the
// last coordinate varying fastest and coordinates compared by enc(.), so the
// index of X is sum_i enc(X_i) * q^(d-1-i).

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp);
std::uint32_t state_index(const Vec& x, std::uint32_t q);
Vec state_vector(std::uint32_t index, std::size_t dim, std::uint32_t q);
/// All q^dim vectors in state order. dim == 0 yields the single empty vector.
std::vector<Vec> enumerate_vectors(const Field& field, std::size_t dim);

}  // namespace convmacw
