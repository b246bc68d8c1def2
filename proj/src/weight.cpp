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

#include "convmacw/weight.hpp"

#include <limits>
#include <sstream>

#include "convmacw/errors.hpp"
#include "convmacw/linalg.hpp"

namespace convmacw {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw GuardExceeded("64-bit weight coefficient", std::numeric_limits<unsigned long long>::max(),
                        std::numeric_limits<std::int64_t>::max());
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw GuardExceeded("64-bit weight coefficient", std::numeric_limits<unsigned long long>::max(),
                        std::numeric_limits<std::int64_t>::max());
  }
  return r;
}

// Coefficients of (1 - W)^j (1 + (q-1)W)^(n-j) as exact integers.
std::vector<std::vector<mpz_class>> kernel_table(std::size_t n, std::uint32_t q) {
  std::vector<std::vector<mpz_class>> table(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<mpz_class> poly{1};
    auto times_linear = [&](const mpz_class& c0, const mpz_class& c1) {
      std::vector<mpz_class> next(poly.size() + 1);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * c0;
        next[i + 1] += poly[i] * c1;
      }
      poly = std::move(next);
    };
    for (std::size_t i = 0; i < j; ++i) times_linear(1, -1);
    for (std::size_t i = j; i < n; ++i) times_linear(1, q - 1);
    table[j] = std::move(poly);
  }
  return table;
}

std::string monomial_suffix(std::size_t j) {
  if (j == 0) return "";
  if (j == 1) return "W";
  return "W^" + std::to_string(j);
}

}  // namespace

WePoly::WePoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

WePoly WePoly::monomial(std::int64_t c, std::size_t j) {
  std::vector<std::int64_t> v(j + 1, 0);
  v[j] = c;
  return WePoly(std::move(v));
}

void WePoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t WePoly::coefficient_sum() const {
  std::int64_t s = 0;
  for (auto c : c_) s = checked_add(s, c);
  return s;
}

WePoly& WePoly::operator+=(const WePoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] = checked_add(c_[j], o.c_[j]);
  trim();
  return *this;
}

WePoly WePoly::operator+(const WePoly& o) const {
  WePoly out = *this;
  out += o;
  return out;
}

WePoly WePoly::operator-(const WePoly& o) const { return *this + o * -1; }

WePoly WePoly::operator*(std::int64_t s) const {
  std::vector<std::int64_t> v(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) v[j] = checked_mul(c_[j], s);
  return WePoly(std::move(v));
}

WePoly WePoly::operator*(const WePoly& o) const {
  if (is_zero() || o.is_zero()) return WePoly();
  std::vector<std::int64_t> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = checked_add(v[i + j], checked_mul(c_[i], o.c_[j]));
    }
  }
  return WePoly(std::move(v));
}

std::string WePoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    std::int64_t c = c_[j];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (a != 1 || j == 0) os << a;
    os << monomial_suffix(j);
  }
  return os.str();
}

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::from_we(const WePoly& w) {
  std::vector<Rational> v;
  for (auto c : w.coeffs()) v.emplace_back(static_cast<long>(c));
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
  trim();
  return *this;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  RatPoly out = *this;
  out += o;
  return out;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + o * Rational(-1); }

RatPoly RatPoly::operator*(const Rational& s) const {
  std::vector<Rational> v(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) v[j] = c_[j] * s;
  return RatPoly(std::move(v));
}

bool RatPoly::is_integral() const {
  for (const auto& c : c_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

WePoly RatPoly::to_we() const {
  std::vector<std::int64_t> v;
  for (const auto& c : c_) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) {
      throw IdentityViolation("polynomial " + to_string() + " is not integral");
    }
    v.push_back(c.get_num().get_si());
  }
  return WePoly(std::move(v));
}

std::string RatPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& c = c_[j];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const Rational a = abs(c);
    if (a.get_den() != 1) {
      os << (j == 0 ? a.get_str() : "(" + a.get_str() + ")");
    } else if (a != 1 || j == 0) {
      os << a.get_str();
    }
    os << monomial_suffix(j);
  }
  return os.str();
}

WePoly we_of_affine(const Field& field, const Vec& offset, const std::vector<Vec>& basis,
                    std::size_t n) {
  if (offset.size() != n) throw UsageError("affine offset has wrong length");
  std::vector<std::int64_t> counts(n + 1, 0);
  const Subspace span = Subspace::span(field, n, basis);
  if (span.dim() != basis.size()) throw UsageError("we_of_affine: basis is linearly dependent");
  span.for_each([&](const Vec& v) { ++counts[hamming_weight(vec_add(field, v, offset))]; });
  return WePoly(std::move(counts));
}

WePoly full_space_we(std::size_t n, std::uint32_t q) {
  WePoly out({1});
  const WePoly lin({1, static_cast<std::int64_t>(q) - 1});
  for (std::size_t i = 0; i < n; ++i) out = out * lin;
  return out;
}

WePoly macwilliams_H(const WePoly& f, std::size_t n, std::uint32_t q) {
  if (f.degree() > static_cast<int>(n)) throw UsageError("MacWilliams transform needs deg f <= n");
  const auto table = kernel_table(n, q);
  std::vector<std::int64_t> out(n + 1, 0);
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    const std::int64_t a = f.coeffs()[j];
    if (a == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) {
      const mpz_class& t = table[j][i];
      if (!t.fits_slong_p()) {
        throw GuardExceeded("64-bit weight coefficient", std::numeric_limits<unsigned long long>::max(),
                            std::numeric_limits<std::int64_t>::max());
      }
      out[i] = checked_add(out[i], checked_mul(a, t.get_si()));
    }
  }
  return WePoly(std::move(out));
}

RatPoly macwilliams_H(const RatPoly& f, std::size_t n, std::uint32_t q) {
  if (f.degree() > static_cast<int>(n)) throw UsageError("MacWilliams transform needs deg f <= n");
  const auto table = kernel_table(n, q);
  std::vector<Rational> out(n + 1);
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    const Rational& a = f.coeffs()[j];
    if (sgn(a) == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) out[i] += a * Rational(table[j][i]);
  }
  return RatPoly(std::move(out));
}

CycloPoly macwilliams_H(const CycloPoly& f, std::size_t n) {
  if (static_cast<int>(f.coeffs.size()) - 1 > static_cast<int>(n)) {
    throw UsageError("MacWilliams transform needs deg f <= n");
  }
  const auto table = kernel_table(n, f.q);
  CycloPoly out{f.p, f.q, f.scale_pow, std::vector<CycloNum>(n + 1, CycloNum(f.p))};
  for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
    if (f.coeffs[j].is_zero()) continue;
    for (std::size_t i = 0; i <= n; ++i) out.coeffs[i] += f.coeffs[j] * Rational(table[j][i]);
  }
  out.trim();
  return out;
}

}  // namespace convmacw
