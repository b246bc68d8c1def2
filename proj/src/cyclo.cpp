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

#include "convmacw/cyclo.hpp"

#include <algorithm>
#include <sstream>

#include "convmacw/errors.hpp"

namespace convmacw {

CycloNum::CycloNum(std::uint32_t p) : p_(p), c_(p - 1) {
  if (p < 2) throw UsageError("cyclotomic field needs a prime p >= 2");
}

CycloNum CycloNum::from_rational(std::uint32_t p, const Rational& r) {
  CycloNum out(p);
  out.c_[0] = r;
  return out;
}

CycloNum CycloNum::from_power_sums(std::uint32_t p, const std::vector<Rational>& by_power) {
  if (by_power.size() != p) throw UsageError("from_power_sums expects p coefficients");
  CycloNum out(p);
  for (std::uint32_t j = 0; j + 1 < p; ++j) out.c_[j] = by_power[j] - by_power[p - 1];
  return out;
}

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool CycloNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  CycloNum out = *this;
  out += o;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (p_ != o.p_) throw UsageError("cyclotomic operands with different p");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum out(p_);
  for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = -c_[j];
  return out;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (p_ != o.p_) throw UsageError("cyclotomic operands with different p");
  std::vector<Rational> by_power(p_);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p_; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      by_power[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  return from_power_sums(p_, by_power);
}

CycloNum CycloNum::operator*(const Rational& r) const {
  CycloNum out(p_);
  for (std::size_t j = 0; j < c_.size(); ++j) out.c_[j] = c_[j] * r;
  return out;
}

CycloNum CycloNum::times_root(std::uint32_t k) const {
  std::vector<Rational> by_power(p_);
  for (std::uint32_t j = 0; j + 1 < p_; ++j) by_power[(j + k) % p_] = c_[j];
  return from_power_sums(p_, by_power);
}

std::string CycloNum::to_string() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (sgn(c_[j]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[j].get_str() << ")";
    if (j > 0) os << "z" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return os.str();
}

CycloNum root_power(std::uint32_t p, std::uint64_t k) {
  return CycloNum::from_rational(p, 1).times_root(static_cast<std::uint32_t>(k % p));
}

CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b) { return a * b; }

void CycloPoly::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

bool CycloPoly::is_rational() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const CycloNum& c) { return c.is_rational(); });
}

namespace {
// Exact square root of q^e as a rational, e >= 0 with e even or q square.
Rational q_half_power(std::uint32_t q, int e) {
  mpz_class base = q;
  mpz_class num = 1;
  if (e % 2 != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), base.get_mpz_t());
    if (root * root != base) {
      throw UsageError("rescaling by an odd power of sqrt(q) leaves the rationals");
    }
    mpz_pow_ui(num.get_mpz_t(), root.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
  } else {
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e) / 2));
  }
  return e >= 0 ? Rational(num) : Rational(1) / Rational(num);
}
}  // namespace

CycloPoly CycloPoly::rescaled(int new_scale_pow) const {
  CycloPoly out = *this;
  out.scale_pow = new_scale_pow;
  const Rational factor = q_half_power(q, scale_pow - new_scale_pow);
  for (auto& c : out.coeffs) c = c * factor;
  return out;
}

std::vector<Rational> CycloPoly::to_rational() const {
  if (!is_rational()) throw IdentityViolation("polynomial has irrational cyclotomic coefficients");
  const CycloPoly unit = rescaled(0);
  std::vector<Rational> out;
  out.reserve(unit.coeffs.size());
  for (const auto& c : unit.coeffs) out.push_back(c.rational_part());
  return out;
}

bool operator==(const CycloPoly& a, const CycloPoly& b) {
  if (a.p != b.p || a.q != b.q) return false;
  if (a.scale_pow == b.scale_pow) return a.coeffs == b.coeffs;
  CycloPoly bb = b.rescaled(a.scale_pow);
  bb.trim();
  return a.coeffs == bb.coeffs;
}

}  // namespace convmacw
