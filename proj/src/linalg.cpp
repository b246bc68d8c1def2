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

#include "convmacw/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "convmacw/errors.hpp"

namespace convmacw {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Mat Mat::identity(Field field, std::size_t n) { return scalar(std::move(field), n, 1); }

Mat Mat::scalar(Field field, std::size_t n, Elem a) {
  Mat m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = a;
  return m;
}

Mat Mat::from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(std::move(field), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Mat::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw UsageError("row length does not match matrix width");
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j] >= field_.q()) throw UsageError("matrix entry outside the field");
    at(i, j) = v[j];
  }
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw UsageError("matrix product shape mismatch");
  Mat out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t l = 0; l < cols_; ++l) {
      const Elem a = at(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, o.at(l, j)));
      }
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum shape mismatch");
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], o.data_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat out(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.neg(data_[i]);
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Mat Mat::vstack(const Mat& o) const {
  if (cols_ != o.cols_) throw UsageError("vstack width mismatch");
  Mat out(field_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_) throw UsageError("hstack height mismatch");
  Mat out(field_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
  }
  return out;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block out of range");
  Mat out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = at(r0 + i, c0 + j);
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> Mat::to_nested() const {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

Vec vec_mat(const Field& f, const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw UsageError("vector-matrix shape mismatch");
  Vec out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw UsageError("vector length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec vec_neg(const Field& f, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.neg(a[i]);
  return out;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) { return vec_add(f, a, vec_neg(f, b)); }

Vec vec_scale(const Field& f, Elem c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

Vec vec_concat(const Vec& a, const Vec& b) {
  Vec out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw UsageError("vector length mismatch");
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

std::size_t hamming_weight(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

RrefResult rref(const Mat& m) {
  const Field& f = m.field();
  Mat r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
    std::size_t piv = lead_row;
    while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    if (piv != lead_row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(piv, j), r.at(lead_row, j));
    }
    const Elem inv = f.inv(r.at(lead_row, col));
    for (std::size_t j = 0; j < r.cols(); ++j) r.at(lead_row, j) = f.mul(inv, r.at(lead_row, j));
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row) continue;
      const Elem factor = r.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < r.cols(); ++j) {
        r.at(i, j) = f.sub(r.at(i, j), f.mul(factor, r.at(lead_row, j)));
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat left_kernel(const Mat& m) {
  // u M = 0  <=>  M^t u^t = 0; read off the null space of M^t from its RREF.
  const Field& f = m.field();
  const Mat t = m.transpose();
  const RrefResult rr = rref(t);
  const std::size_t nvars = t.cols();
  std::vector<bool> is_pivot(nvars, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    Vec u(nvars, 0);
    u[free] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      u[rr.pivots[i]] = f.neg(rr.reduced.at(i, free));
    }
    basis.push_back(std::move(u));
  }
  const Mat raw = Mat::from_rows(f, nvars, basis);
  RrefResult canon = rref(raw);
  return canon.reduced.block(0, 0, canon.pivots.size(), nvars);
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw UsageError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult rr = rref(m.hstack(Mat::identity(m.field(), n)));
  if (rr.pivots.size() < n || (n > 0 && rr.pivots[n - 1] != n - 1)) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

std::optional<Vec> solve_left(const Mat& basis, const Vec& v) {
  // c * basis = v  <=>  basis^t c^t = v^t.
  const Field& f = basis.field();
  const std::size_t k = basis.rows();
  Mat aug = basis.transpose().hstack(Mat::from_rows(f, v.size(), {v}).transpose());
  const RrefResult rr = rref(aug);
  Vec c(k, 0);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == k) return std::nullopt;
    c[rr.pivots[i]] = rr.reduced.at(i, k);
  }
  return c;
}

Subspace::Subspace(Field field, std::size_t ambient)
    : ambient_(ambient), basis_(std::move(field), 0, ambient) {}

Subspace Subspace::row_space(const Mat& m) {
  RrefResult rr = rref(m);
  return Subspace(m.cols(), rr.reduced.block(0, 0, rr.pivots.size(), m.cols()));
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vec>& vectors) {
  return row_space(Mat::from_rows(std::move(field), ambient, vectors));
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  return Subspace(ambient, Mat::identity(std::move(field), ambient));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw UsageError("membership test with wrong vector length");
  return solve_left(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& v : other.basis_vectors()) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw UsageError("subspace sum across different ambients");
  return row_space(basis_.vstack(other.basis_));
}

Subspace Subspace::perp() const {
  if (dim() == 0) return full(field(), ambient_);
  return Subspace(ambient_, left_kernel(basis_.transpose()));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw UsageError("subspace intersection across different ambients");
  return perp().sum(other.perp()).perp();
}

Subspace Subspace::image(const Mat& m) const {
  if (m.rows() != ambient_) throw UsageError("image under a map of wrong shape");
  if (dim() == 0) return Subspace(field(), m.cols());
  return row_space(basis_ * m);
}

Subspace Subspace::preimage(const Mat& m, const Subspace& target) const {
  if (m.rows() != ambient_ || m.cols() != target.ambient()) {
    throw UsageError("preimage under a map of wrong shape");
  }
  if (dim() == 0) return *this;
  // c B M lies in target iff c B M W^t = 0 for a basis W of target^perp.
  const Subspace tperp = target.perp();
  Mat cond = basis_ * m;
  if (tperp.dim() == 0) return *this;
  cond = cond * tperp.basis().transpose();
  const Mat coeffs = left_kernel(cond);
  if (coeffs.rows() == 0) return Subspace(field(), ambient_);
  return row_space(coeffs * basis_);
}

Subspace Subspace::complement_of(const Subspace& inner) const {
  if (!contains(inner)) throw UsageError("complement_of: inner space is not contained");
  std::vector<Vec> elems = elements();
  const std::uint32_t q = field().q();
  std::sort(elems.begin(), elems.end(), [q](const Vec& a, const Vec& b) {
    return state_index(a, q) < state_index(b, q);
  });
  std::vector<Vec> chosen;
  Subspace acc = inner;
  const std::size_t target = dim();
  for (const Vec& v : elems) {
    if (acc.dim() == target) break;
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = acc.sum(span(field(), ambient_, {v}));
  }
  return span(field(), ambient_, chosen);
}

void Subspace::for_each(const std::function<void(const Vec&)>& fn) const {
  const Field& f = field();
  const std::size_t d = dim();
  const std::uint64_t count = checked_power(f.q(), d);
  if (count > (1ull << 26)) throw GuardExceeded("subspace enumeration q^dim", count, 1ull << 26);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Vec c = state_vector(static_cast<std::uint32_t>(i), d, f.q());
    fn(d == 0 ? Vec(ambient_, 0) : vec_mat(f, c, basis_));
  }
}

std::vector<Vec> Subspace::elements() const {
  std::vector<Vec> out;
  for_each([&](const Vec& v) { out.push_back(v); });
  return out;
}

bool trivially_intersect(const Subspace& u, const Subspace& v) {
  return u.sum(v).dim() == u.dim() + v.dim();
}

}  // namespace convmacw
