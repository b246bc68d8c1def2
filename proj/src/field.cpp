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

#include "convmacw/field.hpp"

#include <limits>
#include <string>

#include "convmacw/errors.hpp"

namespace convmacw {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;
constexpr std::uint32_t kTableQ = 256;

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using Digits = std::vector<std::uint32_t>;

// Remainder of a by the monic polynomial m over F_p, both constant term first.
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool divides(const Digits& f, const Digits& m, std::uint32_t p) {
  for (std::uint32_t c : poly_mod(m, f, p)) {
    if (c != 0) return false;
  }
  return true;
}

bool is_irreducible(const Digits& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // Every monic polynomial of degree d, lower coefficients counted in base p.
    std::uint64_t count = checked_power(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      Digits f(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (divides(f, m, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  FieldSpec spec;
  spec.p = p;
  spec.s = 1;
  spec.q = p;
  return spec;
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2) throw UsageError("field modulus must have degree >= 1");
  FieldSpec spec;
  spec.p = p;
  spec.s = static_cast<std::uint32_t>(modulus.size() - 1);
  spec.q = static_cast<std::uint32_t>(checked_power(p, spec.s));
  if (spec.s == 1) {
    // A linear modulus adds nothing; F_p is represented without one.
    return prime(p);
  }
  spec.modulus = std::move(modulus);
  return spec;
}

struct Field::Tables {
  FieldSpec spec;
  std::vector<std::uint16_t> add;  // q*q, only when q <= kTableQ
  std::vector<std::uint16_t> mul;  // q*q, only when q <= kTableQ
  std::vector<Elem> inv;           // q
  std::vector<std::uint32_t> trace;  // q
  std::vector<std::uint32_t> pow_p;  // p^i for i < s

  Digits digits(Elem a) const {
    Digits d(spec.s, 0);
    for (std::uint32_t i = 0; i < spec.s; ++i) {
      d[i] = a % spec.p;
      a /= spec.p;
    }
    return d;
  }

  Elem encode(const Digits& d) const {
    Elem v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * spec.p + d[i];
    return v;
  }

  Elem slow_add(Elem a, Elem b) const {
    if (spec.s == 1) return (a + b) % spec.p;
    Digits da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < spec.s; ++i) da[i] = (da[i] + db[i]) % spec.p;
    return encode(da);
  }

  Elem slow_mul(Elem a, Elem b) const {
    if (spec.s == 1) {
      return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % spec.p);
    }
    Digits da = digits(a), db = digits(b);
    Digits prod(2 * spec.s - 1, 0);
    for (std::uint32_t i = 0; i < spec.s; ++i) {
      for (std::uint32_t j = 0; j < spec.s; ++j) {
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % spec.p;
      }
    }
    return encode(poly_mod(std::move(prod), spec.modulus, spec.p));
  }
};

Field::Field(const FieldSpec& spec_in) {
  FieldSpec spec = spec_in;
  if (!is_prime(spec.p)) {
    throw UsageError("field characteristic " + std::to_string(spec.p) + " is not prime");
  }
  if (spec.s == 0) throw UsageError("field extension degree must be >= 1");
  if (spec.s == 1) {
    if (!spec.modulus.empty()) {
      throw UsageError("a prime field takes no modulus");
    }
  } else {
    if (spec.modulus.size() != spec.s + 1) {
      throw UsageError("field modulus must have exactly s+1 = " + std::to_string(spec.s + 1) +
                       " coefficients");
    }
    for (std::uint32_t c : spec.modulus) {
      if (c >= spec.p) throw UsageError("field modulus coefficient out of range [0,p)");
    }
    if (spec.modulus.back() != 1) throw UsageError("field modulus must be monic");
    if (!is_irreducible(spec.modulus, spec.p)) {
      throw UsageError("field modulus is reducible over F_" + std::to_string(spec.p));
    }
  }
  const std::uint64_t q = checked_power(spec.p, spec.s);
  if (q > kMaxQ) throw UsageError("fields with q > 2^16 are not supported");
  spec.q = static_cast<std::uint32_t>(q);

  auto t = std::make_shared<Tables>();
  t->spec = spec;
  const std::uint32_t qq = spec.q;
  if (qq <= kTableQ) {
    t->add.resize(static_cast<std::size_t>(qq) * qq);
    t->mul.resize(static_cast<std::size_t>(qq) * qq);
    for (Elem a = 0; a < qq; ++a) {
      for (Elem b = 0; b < qq; ++b) {
        t->add[a * qq + b] = static_cast<std::uint16_t>(t->slow_add(a, b));
        t->mul[a * qq + b] = static_cast<std::uint16_t>(t->slow_mul(a, b));
      }
    }
  }
  t->pow_p.resize(spec.s);
  for (std::uint32_t i = 0; i < spec.s; ++i) {
    t->pow_p[i] = static_cast<std::uint32_t>(checked_power(spec.p, i));
  }
  t_ = t;

  // Inverses by a^(q-2), traces by the defining power sum.
  t->inv.assign(qq, 0);
  t->trace.assign(qq, 0);
  for (Elem a = 0; a < qq; ++a) {
    if (a != 0) t->inv[a] = pow(a, qq - 2);
    Elem sum = 0;
    Elem frob = a;
    for (std::uint32_t i = 0; i < spec.s; ++i) {
      sum = add(sum, frob);
      frob = pow(frob, spec.p);
    }
    if (sum >= spec.p) throw IdentityViolation("trace left the prime subfield");
    t->trace[a] = sum;
  }
}

const FieldSpec& Field::spec() const { return t_->spec; }
std::uint32_t Field::p() const { return t_->spec.p; }
std::uint32_t Field::s() const { return t_->spec.s; }
std::uint32_t Field::q() const { return t_->spec.q; }

Elem Field::add(Elem a, Elem b) const {
  if (!t_->add.empty()) return t_->add[a * t_->spec.q + b];
  return t_->slow_add(a, b);
}

Elem Field::neg(Elem a) const {
  const std::uint32_t p = t_->spec.p;
  if (t_->spec.s == 1) return a == 0 ? 0 : p - a;
  Digits d = t_->digits(a);
  for (auto& x : d) x = (p - x) % p;
  return t_->encode(d);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (!t_->mul.empty()) return t_->mul[a * t_->spec.q + b];
  return t_->slow_mul(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return t_->inv[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::trace(Elem a) const { return t_->trace[a]; }

Elem Field::from_int(long long c) const {
  const long long p = t_->spec.p;
  return static_cast<Elem>(((c % p) + p) % p);
}

std::vector<std::uint32_t> Field::digits(Elem a) const { return t_->digits(a); }

Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() > t_->spec.s) throw UsageError("too many digits for field element");
  Digits d(t_->spec.s, 0);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= t_->spec.p) throw UsageError("field element digit out of range [0,p)");
    d[i] = digits[i];
  }
  return t_->encode(d);
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_.q()) throw UsageError("field element encoding out of range");
}

FieldElement FieldElement::from_digits(Field field, std::span<const std::uint32_t> digits) {
  const Elem v = field.from_digits(digits);
  return FieldElement(std::move(field), v);
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw UsageError("operands belong to different fields");
}
}  // namespace

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field(), a.field().add(a.value(), b.value()));
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field(), a.field().mul(a.value(), b.value()));
}

FieldElement field_inv(const FieldElement& a) {
  return FieldElement(a.field(), a.field().inv(a.value()));
}

std::uint32_t trace(const FieldElement& a) { return a.field().trace(a.value()); }

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      throw GuardExceeded("power", std::numeric_limits<unsigned long long>::max(),
                          std::numeric_limits<std::uint64_t>::max());
    }
    result *= base;
  }
  return result;
}

std::uint32_t state_index(const Vec& x, std::uint32_t q) {
  std::uint64_t idx = 0;
  for (Elem e : x) idx = idx * q + e;
  return static_cast<std::uint32_t>(idx);
}

Vec state_vector(std::uint32_t index, std::size_t dim, std::uint32_t q) {
  Vec x(dim, 0);
  for (std::size_t i = dim; i-- > 0;) {
    x[i] = index % q;
    index /= q;
  }
  return x;
}

std::vector<Vec> enumerate_vectors(const Field& field, std::size_t dim) {
  const std::uint64_t count = checked_power(field.q(), dim);
  if (count > (1ull << 26)) throw GuardExceeded("q^dim", count, 1ull << 26);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(state_vector(static_cast<std::uint32_t>(i), dim, field.q()));
  }
  return out;
}

}  // namespace convmacw
