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
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "convmacw/io.hpp"

namespace convmacw::testing {

inline std::string data_path(const std::string& name) {
  return std::string(CONVMACW_TEST_DATA) + "/" + name;
}

inline CodeDocument binary_code() { return load_code_document(data_path("binary_5_2_3.json")); }
inline CodeDocument ternary_code() { return load_code_document(data_path("ternary_3_2_2.json")); }

inline PolyMatrix poly_matrix(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix g(f, rows.size(), rows.at(0).size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) g.at(i, j) = parse_polynomial(rows[i][j], f);
  }
  return g;
}

inline Mat mat(const Field& f, const std::vector<std::vector<Elem>>& rows) {
  Mat m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

/// Parses "1+W^3", "W+W^2", "W", "0" into a weight enumerator.
inline WePoly we(const std::string& text) {
  std::vector<std::int64_t> c;
  std::size_t i = 0;
  auto num = [&]() {
    std::int64_t v = 0;
    bool any = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i++] - '0');
      any = true;
    }
    return any ? v : -1;
  };
  while (i < text.size()) {
    if (text[i] == '+' || text[i] == ' ') {
      ++i;
      continue;
    }
    std::int64_t coef = num();
    std::size_t power = 0;
    if (i < text.size() && text[i] == 'W') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        power = static_cast<std::size_t>(num());
      }
      if (coef < 0) coef = 1;
    }
    if (c.size() <= power) c.resize(power + 1, 0);
    c[power] += coef;
  }
  return WePoly(c);
}

/// Adjacency matrix computed straight from the encoder coefficients: the
/// state is the vector of past inputs (u_{i,t-1}, ..., u_{i,t-delta_i}) for
/// each row i with positive degree, rows taken in descending degree order
/// (stable), and the output is sum_l u_{t-l} G_l.
inline std::map<std::pair<std::uint32_t, std::uint32_t>, WePoly> trellis_oracle(const PolyMatrix& g) {
  const Field& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < k; ++i) {
    if (g.row_degree(i) > 0) order.push_back(i);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (g.row_degree(i) <= 0) order.push_back(i);
  }
  std::vector<std::size_t> deg(k);
  std::size_t delta = 0;
  for (std::size_t j = 0; j < k; ++j) {
    deg[j] = static_cast<std::size_t>(std::max(0, g.row_degree(order[j])));
    delta += deg[j];
  }
  const std::uint32_t q = f.q();
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::int64_t>> acc;
  for (const Vec& x : enumerate_vectors(f, delta)) {
    for (const Vec& u : enumerate_vectors(f, k)) {
      Vec v(n, 0);
      Vec y(delta, 0);
      std::size_t pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t row = order[j];
        for (std::size_t c = 0; c < n; ++c) {
          Elem s = f.mul(u[j], g.at(row, c).coeff(0));
          for (std::size_t l = 1; l <= deg[j]; ++l) {
            s = f.add(s, f.mul(x[pos + l - 1], g.at(row, c).coeff(l)));
          }
          v[c] = f.add(v[c], s);
        }
        if (deg[j] > 0) {
          y[pos] = u[j];
          for (std::size_t l = 1; l < deg[j]; ++l) y[pos + l] = x[pos + l - 1];
        }
        pos += deg[j];
      }
      auto& c = acc[{state_index(x, q), state_index(y, q)}];
      c.resize(n + 1, 0);
      ++c[hamming_weight(v)];
    }
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, WePoly> out;
  for (auto& [key, c] : acc) out[key] = WePoly(c);
  return out;
}

/// H(f)(w) evaluated at an integer point: sum_j f_j (1-w)^j (1+(q-1)w)^(n-j).
inline mpz_class eval_H(const WePoly& f, std::size_t n, std::uint32_t q, long w) {
  mpz_class total = 0;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), mpz_class(1 - w).get_mpz_t(), j);
    mpz_pow_ui(b.get_mpz_t(), mpz_class(1 + static_cast<long>(q - 1) * w).get_mpz_t(), n - j);
    total += mpz_class(static_cast<long>(f.coeffs()[j])) * a * b;
  }
  return total;
}

inline mpz_class eval(const WePoly& f, long w) {
  mpz_class total = 0, pw = 1;
  for (std::int64_t c : f.coeffs()) {
    total += mpz_class(static_cast<long>(c)) * pw;
    pw *= w;
  }
  return total;
}

/// Weight enumerator of the dual of the row space of m, by testing every
/// vector of F^n for orthogonality.
inline WePoly brute_dual_we(const Mat& m) {
  const Field& f = m.field();
  std::vector<std::int64_t> c(m.cols() + 1, 0);
  for (const Vec& v : enumerate_vectors(f, m.cols())) {
    bool orth = true;
    for (std::size_t i = 0; i < m.rows() && orth; ++i) orth = dot(f, m.row(i), v) == 0;
    if (orth) ++c[hamming_weight(v)];
  }
  return WePoly(c);
}

}  // namespace convmacw::testing
