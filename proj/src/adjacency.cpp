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

#include "convmacw/adjacency.hpp"

#include <algorithm>
#include <sstream>

#include "convmacw/errors.hpp"

namespace convmacw {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IdentityViolation(what);
}

void guard(const std::string& what, std::uint32_t q, std::uint64_t exponent, std::uint64_t limit) {
  const std::uint64_t needed = checked_power(q, exponent);
  if (needed > limit) throw GuardExceeded(what, needed, limit);
}

const WePoly kZero;

}  // namespace

AdjMatrix::AdjMatrix(std::size_t delta, std::uint32_t q, std::size_t n)
    : delta_(delta), q_(q), n_(n) {
  const std::uint64_t d = checked_power(q, delta);
  if (d > (std::uint64_t{1} << 16)) throw GuardExceeded("q^delta states", d, 1u << 16);
  dim_ = static_cast<std::uint32_t>(d);
}

const WePoly& AdjMatrix::at(std::uint32_t row, std::uint32_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? kZero : it->second;
}

void AdjMatrix::set(std::uint32_t row, std::uint32_t col, WePoly w) {
  if (row >= dim_ || col >= dim_) throw UsageError("state index out of range");
  if (w.is_zero()) {
    entries_.erase({row, col});
  } else {
    entries_[{row, col}] = std::move(w);
  }
}

void AdjMatrix::add(std::uint32_t row, std::uint32_t col, const WePoly& w) {
  set(row, col, at(row, col) + w);
}

AdjMatrix AdjMatrix::transpose() const {
  AdjMatrix t(delta_, q_, n_);
  for (const auto& [key, w] : entries_) t.entries_[{key.second, key.first}] = w;
  return t;
}

std::vector<WePoly> AdjMatrix::sorted_entries() const {
  std::vector<WePoly> out;
  out.reserve(static_cast<std::size_t>(dim_) * dim_);
  for (const auto& [key, w] : entries_) out.push_back(w);
  out.resize(static_cast<std::size_t>(dim_) * dim_);
  std::sort(out.begin(), out.end());
  return out;
}

std::string AdjMatrix::to_text() const {
  std::vector<std::vector<std::string>> cells(dim_, std::vector<std::string>(dim_));
  std::vector<std::size_t> width(dim_, 1);
  for (std::uint32_t i = 0; i < dim_; ++i) {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      cells[i][j] = at(i, j).to_string();
      width[j] = std::max(width[j], cells[i][j].size());
    }
  }
  std::ostringstream os;
  for (std::uint32_t i = 0; i < dim_; ++i) {
    for (std::uint32_t j = 0; j < dim_; ++j) {
      if (j > 0) os << " | ";
      os << cells[i][j];
      if (j + 1 < dim_) os << std::string(width[j] - cells[i][j].size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

AdjMatrix adjacency_bruteforce(const ControllerForm& cf, std::uint64_t limit) {
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  guard("q^(2 delta) * q^k (brute-force adjacency)", q, 2 * cf.delta + cf.k, limit);
  AdjMatrix out(cf.delta, q, cf.n);
  const auto states = enumerate_vectors(f, cf.delta);
  const auto inputs = enumerate_vectors(f, cf.k);
  std::map<AdjMatrix::Key, std::vector<std::int64_t>> counts;
  for (const Vec& x : states) {
    const Vec xa = vec_mat(f, x, cf.A);
    const Vec xc = vec_mat(f, x, cf.C);
    const std::uint32_t xi = state_index(x, q);
    for (const Vec& u : inputs) {
      const Vec y = vec_add(f, xa, vec_mat(f, u, cf.B));
      const Vec v = vec_add(f, xc, vec_mat(f, u, cf.D));
      auto& c = counts[{xi, state_index(y, q)}];
      c.resize(cf.n + 1, 0);
      ++c[hamming_weight(v)];
    }
  }
  for (auto& [key, c] : counts) out.set(key.first, key.second, WePoly(std::move(c)));
  return out;
}

AdjMatrix adjacency_fast(const ControllerForm& cf, std::uint64_t limit) {
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  guard("q^(delta + r) * q^(k - r) (adjacency)", q, cf.delta + cf.k, limit);
  AdjMatrix out(cf.delta, q, cf.n);
  const Subspace cc = c_const(cf);
  const std::vector<Vec> cc_basis = cc.basis_vectors();
  const Mat phi_m = phi_matrix(cf);
  const std::size_t d = cf.delta;
  delta_space(cf).for_each([&](const Vec& xy) {
    const Vec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(d));
    const Vec y(xy.begin() + static_cast<std::ptrdiff_t>(d), xy.end());
    const Vec v = vec_mat(f, xy, phi_m);
    out.set(state_index(x, q), state_index(y, q), we_of_affine(f, v, cc_basis, cf.n));
  });
  return out;
}

StatePermutation make_state_permutation(const Mat& P) {
  if (P.rows() != P.cols()) throw UsageError("state permutation needs a square matrix");
  if (!inverse(P)) throw UsageError("state permutation matrix is singular");
  const Field& f = P.field();
  const std::size_t d = P.rows();
  const std::uint32_t q = f.q();
  StatePermutation sp{P, {}, {}};
  const auto states = enumerate_vectors(f, d);
  sp.image.resize(states.size());
  sp.preimage.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::uint32_t j = state_index(vec_mat(f, states[i], P), q);
    sp.image[i] = j;
    sp.preimage[j] = static_cast<std::uint32_t>(i);
  }
  return sp;
}

AdjMatrix conjugate(const AdjMatrix& lambda, const StatePermutation& perm) {
  if (perm.image.size() != lambda.dim()) throw UsageError("permutation size does not match matrix");
  AdjMatrix out(lambda.delta(), lambda.q(), lambda.n());
  for (const auto& [key, w] : lambda.entries()) {
    out.set(perm.preimage[key.first], perm.preimage[key.second], w);
  }
  return out;
}

std::vector<std::vector<int>> permutation_matrix(const StatePermutation& perm) {
  const std::size_t n = perm.image.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][perm.image[i]] = 1;
  return m;
}

EntrySums entry_sums(const AdjMatrix& lambda, const Subspace& delta_star) {
  EntrySums s;
  const std::size_t d = lambda.delta();
  const std::uint32_t q = lambda.q();
  delta_star.for_each([&](const Vec& xy) {
    const Vec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(d));
    const Vec y(xy.begin() + static_cast<std::ptrdiff_t>(d), xy.end());
    s.over_delta_star += lambda.at(state_index(x, q), state_index(y, q));
  });
  for (const auto& [key, w] : lambda.entries()) s.over_all += w;
  return s;
}

EntrySums check_entry_sums(const AdjMatrix& lambda, const ControllerForm& cf,
                           const StateSpaces& s) {
  const EntrySums sums = entry_sums(lambda, s.delta_star);
  const WePoly we_cc = we_of_affine(cf.field, Vec(cf.n, 0), s.c_big.basis_vectors(), cf.n);
  require(sums.over_delta_star == we_cc, "sum over Delta* differs from we(C_C)");
  const auto mult = static_cast<std::int64_t>(checked_power(cf.field.q(), cf.delta - s.r_hat));
  require(sums.over_all == we_cc * mult, "sum over all entries differs from q^(delta - r_hat) we(C_C)");
  return sums;
}

void check_adjacency_structure(const AdjMatrix& lambda, const ControllerForm& cf,
                               const StateSpaces& s) {
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  auto split = [d](const Vec& xy) {
    return std::make_pair(Vec(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(d)),
                          Vec(xy.begin() + static_cast<std::ptrdiff_t>(d), xy.end()));
  };
  auto index_of = [&](const Vec& xy) {
    auto [x, y] = split(xy);
    return AdjMatrix::Key{state_index(x, q), state_index(y, q)};
  };

  require(lambda.support_size() == checked_power(q, d + cf.r), "support size differs from q^(delta + r)");
  const auto csum = static_cast<std::int64_t>(checked_power(q, cf.k - cf.r));
  s.delta.for_each([&](const Vec& xy) {
    const auto key = index_of(xy);
    require(lambda.entries().count(key) == 1, "connected pair with zero entry");
    require(lambda.entries().at(key).coefficient_sum() == csum,
            "entry coefficient sum differs from q^(k - r)");
  });

  const auto kernel = s.ker_phi.elements();
  s.delta_star.for_each([&](const Vec& a) {
    const WePoly& base = lambda.at(index_of(a).first, index_of(a).second);
    for (const Vec& b : kernel) {
      const auto key = index_of(vec_add(f, a, b));
      require(lambda.at(key.first, key.second) == base, "entry not invariant along ker Phi");
    }
  });

  for (Elem alpha = 1; alpha < q; ++alpha) {
    const StatePermutation sp = make_state_permutation(Mat::scalar(f, d, alpha));
    require(conjugate(lambda, sp) == lambda, "adjacency matrix not invariant under scalars");
  }
}

std::uint64_t pgl_candidate_count(std::uint32_t q, std::size_t delta) {
  return checked_power(q, delta * delta);
}

void for_each_pgl_representative(const Field& field, std::size_t delta,
                                 const std::function<bool(const Mat&)>& fn, std::uint64_t limit) {
  const std::uint32_t q = field.q();
  guard("q^(delta^2) matrix candidates", q, delta * delta, limit);
  const std::size_t cells = delta * delta;
  const std::uint64_t total = checked_power(q, cells);
  Mat m(field, delta, delta);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t pos = cells; pos-- > 0;) {
      m.at(pos / delta, pos % delta) = static_cast<Elem>(c % q);
      c /= q;
    }
    Elem first = 0;
    for (std::size_t pos = 0; pos < cells && first == 0; ++pos) first = m.at(pos / delta, pos % delta);
    if (cells > 0 && first != 1) continue;
    if (!inverse(m)) continue;
    if (!fn(m)) return;
  }
}

std::optional<Mat> find_conjugating_matrix(const AdjMatrix& a, const AdjMatrix& b,
                                           const Field& field, std::uint64_t limit) {
  if (a.delta() != b.delta() || a.q() != b.q()) throw UsageError("matrices have different shapes");
  std::optional<Mat> found;
  for_each_pgl_representative(
      field, a.delta(),
      [&](const Mat& P) {
        if (conjugate(b, make_state_permutation(P)) == a) {
          found = P;
          return false;
        }
        return true;
      },
      limit);
  return found;
}

}  // namespace convmacw
