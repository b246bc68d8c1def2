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

#include "convmacw/poly_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "convmacw/errors.hpp"

namespace convmacw {

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elem e : c_) {
    if (e >= field_.q()) throw UsageError("polynomial coefficient outside the field");
  }
  trim();
}

ZPoly ZPoly::constant(Field field, Elem c) { return ZPoly(std::move(field), {c}); }

ZPoly ZPoly::monomial(Field field, Elem c, std::size_t power) {
  std::vector<Elem> v(power + 1, 0);
  v[power] = c;
  return ZPoly(std::move(field), std::move(v));
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), o.coeff(i));
  return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::operator-() const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.neg(c_[i]);
  return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return ZPoly(field_);
  std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
    }
  }
  return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::scaled(Elem c) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c, c_[i]);
  return ZPoly(field_, std::move(v));
}

ZPoly ZPoly::shifted(std::size_t k) const {
  if (is_zero()) return *this;
  std::vector<Elem> v(k, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return ZPoly(field_, std::move(v));
}

void ZPoly::divmod(const ZPoly& d, ZPoly& quot, ZPoly& rem) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  rem = *this;
  quot = ZPoly(field_);
  const Elem lead_inv = field_.inv(d.leading());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const Elem c = field_.mul(rem.leading(), lead_inv);
    const ZPoly t = ZPoly::monomial(field_, c, shift);
    quot = quot + t;
    rem = rem - t * d;
  }
}

namespace {
std::string coeff_string(const Field& f, Elem c) {
  if (c < f.p()) return std::to_string(c);
  std::ostringstream os;
  os << "[";
  const auto d = f.digits(c);
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}
}  // namespace

std::string ZPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << coeff_string(field_, c_[i]);
      continue;
    }
    if (c_[i] != 1) os << coeff_string(field_, c_[i]);
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

// ----------------------------------------------------------- PolyMatrix

PolyMatrix::PolyMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, ZPoly(field)) {}

PolyMatrix PolyMatrix::from_coefficients(const std::vector<Mat>& by_power) {
  if (by_power.empty()) throw UsageError("from_coefficients needs at least one matrix");
  const Mat& m0 = by_power.front();
  PolyMatrix out(m0.field(), m0.rows(), m0.cols());
  for (std::size_t i = 0; i < m0.rows(); ++i) {
    for (std::size_t j = 0; j < m0.cols(); ++j) {
      std::vector<Elem> c;
      for (const Mat& m : by_power) {
        if (m.rows() != m0.rows() || m.cols() != m0.cols()) {
          throw UsageError("coefficient matrices differ in shape");
        }
        c.push_back(m.at(i, j));
      }
      out.at(i, j) = ZPoly(m0.field(), std::move(c));
    }
  }
  return out;
}

PolyMatrix PolyMatrix::from_constant(const Mat& m) { return from_coefficients({m}); }

PolyMatrix PolyMatrix::identity(Field field, std::size_t n) {
  return from_constant(Mat::identity(std::move(field), n));
}

int PolyMatrix::row_degree(std::size_t i) const {
  int d = ZPoly::kNegInfDegree;
  for (std::size_t j = 0; j < cols_; ++j) d = std::max(d, at(i, j).degree());
  return d;
}

int PolyMatrix::max_degree() const {
  int d = ZPoly::kNegInfDegree;
  for (const auto& e : e_) d = std::max(d, e.degree());
  return d;
}

Mat PolyMatrix::coefficient(std::size_t l) const {
  Mat m(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).coeff(l);
  }
  return m;
}

Vec PolyMatrix::row_coefficient(std::size_t i, std::size_t l) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j).coeff(l);
  return v;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw UsageError("polynomial matrix product shape mismatch");
  PolyMatrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < o.cols_; ++j) {
      ZPoly s(field_);
      for (std::size_t l = 0; l < cols_; ++l) s = s + at(i, l) * o.at(l, j);
      out.at(i, j) = s;
    }
  }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(idx[i], j);
  }
  return out;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, j) = at(i, idx[j]);
  }
  return out;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const ZPoly& p) { return p.is_zero(); });
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(at(i, j).to_string());
  }
  return out;
}

std::string CodeProfile::to_string() const {
  std::ostringstream os;
  os << "(" << n << "," << k << "," << delta << "), indices (";
  for (std::size_t i = 0; i < forney.size(); ++i) os << (i ? "," : "") << forney[i];
  os << "), r=" << r;
  return os.str();
}

// ------------------------------------------------------------ algorithms

namespace {

struct ColumnReduction {
  PolyMatrix reduced;  // G U = [L | 0]
  PolyMatrix u;
  bool full_rank = true;
  std::size_t failed_row = 0;
};

void column_axpy(PolyMatrix& m, std::size_t dst, std::size_t src, const ZPoly& t) {
  // column dst -= t * column src
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) = m.at(i, dst) - t * m.at(i, src);
}

void column_swap(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

ColumnReduction reduce_columns(const PolyMatrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k > n) throw UsageError("encoder has more rows than columns");
  ColumnReduction cr{g, PolyMatrix::identity(g.field(), n)};
  PolyMatrix& a = cr.reduced;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = i; j < n; ++j) {
        if (a.at(i, j).is_zero()) continue;
        if (best == n || a.at(i, j).degree() < a.at(i, best).degree()) best = j;
      }
      if (best == n) {
        cr.full_rank = false;
        cr.failed_row = i;
        return cr;
      }
      column_swap(a, i, best);
      column_swap(cr.u, i, best);
      bool clean = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a.at(i, j).is_zero()) continue;
        ZPoly quot(g.field()), rem(g.field());
        a.at(i, j).divmod(a.at(i, i), quot, rem);
        column_axpy(a, j, i, quot);
        column_axpy(cr.u, j, i, quot);
        if (!a.at(i, j).is_zero()) clean = false;
      }
      if (clean) break;
    }
  }
  return cr;
}

ZPoly det_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const Field& f = m.field();
  if (row == m.rows()) return ZPoly::constant(f, 1);
  ZPoly total(f);
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const std::size_t c = cols[idx];
    if (m.at(row, c).is_zero()) continue;
    std::vector<std::size_t> rest = cols;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    ZPoly term = m.at(row, c) * det_rec(m, rest, row + 1);
    total = (idx % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace

ZPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  std::iota(cols.begin(), cols.end(), 0);
  return det_rec(m, cols, 0);
}

BasicnessReport basicness(const PolyMatrix& g) {
  BasicnessReport rep;
  const ColumnReduction cr = reduce_columns(g);
  if (!cr.full_rank) {
    rep.diagnostic = "rank deficient over F_q(z): row " + std::to_string(cr.failed_row + 1) +
                     " depends on the rows above it";
    return rep;
  }
  rep.full_rank = true;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    const ZPoly& d = cr.reduced.at(i, i);
    if (!d.is_nonzero_constant()) {
      rep.diagnostic = "nontrivial invariant factor: triangular pivot " + std::to_string(i + 1) +
                       " is " + d.to_string();
      return rep;
    }
  }
  rep.basic = true;
  return rep;
}

bool is_basic(const PolyMatrix& g) { return basicness(g).basic; }

std::optional<PolyMatrix> right_inverse(const PolyMatrix& g) {
  const ColumnReduction cr = reduce_columns(g);
  const std::size_t k = g.rows();
  const Field& f = g.field();
  if (!cr.full_rank) return std::nullopt;
  for (std::size_t i = 0; i < k; ++i) {
    if (!cr.reduced.at(i, i).is_nonzero_constant()) return std::nullopt;
  }
  // Solve L X = I by forward substitution.
  PolyMatrix x(f, k, k);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      ZPoly s = (i == c) ? ZPoly::constant(f, 1) : ZPoly(f);
      for (std::size_t j = 0; j < i; ++j) s = s - cr.reduced.at(i, j) * x.at(j, c);
      x.at(i, c) = s.scaled(f.inv(cr.reduced.at(i, i).leading()));
    }
  }
  std::vector<std::size_t> first(k);
  std::iota(first.begin(), first.end(), 0);
  return cr.u.select_cols(first) * x;
}

std::size_t code_degree(const PolyMatrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k > n) throw UsageError("encoder has more rows than columns");
  int best = ZPoly::kNegInfDegree;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  // Enumerate column subsets in lexicographic order via prev_permutation.
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (pick[j]) cols.push_back(j);
    }
    best = std::max(best, determinant(g.select_cols(cols)).degree());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (best == ZPoly::kNegInfDegree) throw UsageError("encoder is rank deficient over F_q(z)");
  return static_cast<std::size_t>(best);
}

MinimalityReport is_minimal(const PolyMatrix& g) {
  const BasicnessReport b = basicness(g);
  if (!b.basic) throw UsageError("minimality needs a basic encoder: " + b.diagnostic);
  MinimalityReport rep;
  rep.degree = code_degree(g);
  int sum = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    rep.row_degrees.push_back(g.row_degree(i));
    sum += g.row_degree(i);
  }
  rep.minimal = sum == static_cast<int>(rep.degree);
  return rep;
}

CodeProfile code_profile(const PolyMatrix& g) {
  const MinimalityReport m = is_minimal(g);
  if (!m.minimal) throw UsageError("encoder is basic but not minimal");
  CodeProfile prof;
  prof.n = g.cols();
  prof.k = g.rows();
  prof.delta = m.degree;
  for (int d : m.row_degrees) prof.forney.push_back(static_cast<std::size_t>(d));
  std::sort(prof.forney.rbegin(), prof.forney.rend());
  prof.r = static_cast<std::size_t>(
      std::count_if(prof.forney.begin(), prof.forney.end(), [](std::size_t d) { return d > 0; }));
  return prof;
}

PolyMatrix make_minimal_basic(const PolyMatrix& g_in) {
  const BasicnessReport b = basicness(g_in);
  if (!b.basic) {
    throw UsageError("input does not generate a (noncatastrophic, delay-free) code: " +
                     b.diagnostic);
  }
  const Field& f = g_in.field();
  const std::size_t k = g_in.rows();
  const std::size_t n = g_in.cols();
  PolyMatrix g = g_in;
  while (true) {
    std::vector<int> deg(k);
    Mat high(f, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      deg[i] = g.row_degree(i);
      high.set_row(i, g.row_coefficient(i, static_cast<std::size_t>(deg[i])));
    }
    const Mat dep = left_kernel(high);
    if (dep.rows() == 0) break;
    const Vec c = dep.row(0);
    std::size_t i0 = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] != 0 && (i0 == k || deg[i] > deg[i0])) i0 = i;
    }
    // Row i0 <- c_i0^{-1} sum_i c_i z^(d_i0 - d_i) g_i, which cancels the top coefficient.
    const Elem scale = f.inv(c[i0]);
    for (std::size_t j = 0; j < n; ++j) {
      ZPoly acc(f);
      for (std::size_t i = 0; i < k; ++i) {
        if (c[i] == 0) continue;
        acc = acc + g.at(i, j).scaled(f.mul(scale, c[i])).shifted(
                        static_cast<std::size_t>(deg[i0] - deg[i]));
      }
      g.at(i0, j) = acc;
    }
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.row_degree(a) > g.row_degree(b); });
  return g.select_rows(order);
}

PolyMatrix dual_generator(const PolyMatrix& g) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  if (k >= n) throw UsageError("dual code needs k < n");
  const ColumnReduction cr = reduce_columns(g);
  if (!cr.full_rank) throw UsageError("encoder is rank deficient over F_q(z)");
  std::vector<std::size_t> tail;
  for (std::size_t j = k; j < n; ++j) tail.push_back(j);
  const PolyMatrix kernel = cr.u.select_cols(tail).transpose();
  PolyMatrix dual = make_minimal_basic(kernel);
  if (!(dual * g.transpose()).is_zero()) {
    throw IdentityViolation("dual generator is not orthogonal to the encoder");
  }
  if (code_degree(dual) != code_degree(g)) {
    throw IdentityViolation("dual generator has a different degree");
  }
  return dual;
}

bool same_code(const PolyMatrix& g1, const PolyMatrix& g2) {
  if (g1.rows() != g2.rows() || g1.cols() != g2.cols()) return false;
  auto contained = [](const PolyMatrix& a, const PolyMatrix& b) {
    // rows of b lie in the row module of a iff b = (b R_a) a.
    const auto r = right_inverse(a);
    if (!r) throw UsageError("same_code needs basic encoders");
    return (b * *r) * a == b;
  };
  return contained(g1, g2) && contained(g2, g1);
}

std::vector<ZPoly> encode(const std::vector<ZPoly>& u, const PolyMatrix& g) {
  if (u.size() != g.rows()) throw UsageError("message length does not match the encoder");
  std::vector<ZPoly> out(g.cols(), ZPoly(g.field()));
  for (std::size_t j = 0; j < g.cols(); ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) out[j] = out[j] + u[i] * g.at(i, j);
  }
  return out;
}

std::size_t codeword_weight(const std::vector<ZPoly>& v) {
  std::size_t w = 0;
  for (const auto& p : v) {
    for (Elem c : p.coeffs()) w += (c != 0);
  }
  return w;
}

}  // namespace convmacw
