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

#include "convmacw/state_space.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "convmacw/errors.hpp"

namespace convmacw {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IdentityViolation(what);
}

bool contains_index(const std::vector<std::size_t>& set, std::size_t i) {
  return std::find(set.begin(), set.end(), i) != set.end();
}

}  // namespace

ControllerForm build_ccf(const PolyMatrix& g) {
  const BasicnessReport b = basicness(g);
  if (!b.basic) {
    throw UsageError("input does not generate a (noncatastrophic, delay-free) code: " +
                     b.diagnostic);
  }
  const MinimalityReport m = is_minimal(g);
  if (!m.minimal) throw UsageError("encoder is basic but not minimal");

  const Field& f = g.field();
  ControllerForm cf{f, g.cols(), g.rows(), m.degree, 0,
                    Mat(f, 0, 0), Mat(f, 0, 0), Mat(f, 0, 0), Mat(f, 0, 0),
                    code_profile(g), g, {}, {}, {}, {}};
  std::vector<std::size_t> order(cf.k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return g.row_degree(i) > 0; });
  cf.row_order = order;
  cf.encoder = g.select_rows(order);
  for (std::size_t i = 0; i < cf.k; ++i) {
    cf.row_degrees.push_back(static_cast<std::size_t>(cf.encoder.row_degree(i)));
  }
  cf.r = cf.profile.r;

  const std::size_t d = cf.delta;
  cf.A = Mat(f, d, d);
  cf.B = Mat(f, cf.k, d);
  cf.C = Mat(f, d, cf.n);
  cf.D = cf.encoder.coefficient(0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < cf.r; ++i) {
    const std::size_t di = cf.row_degrees[i];
    cf.I_set.push_back(pos + 1);
    cf.J_set.push_back(pos + di);
    cf.B.at(i, pos) = 1;
    for (std::size_t l = 0; l < di; ++l) {
      if (l + 1 < di) cf.A.at(pos + l, pos + l + 1) = 1;
      cf.C.set_row(pos + l, cf.encoder.row_coefficient(i, l + 1));
    }
    pos += di;
  }
  require(pos == d, "Forney indices do not add up to the degree");
  check_ccf_identities(cf);
  check_transfer_function(cf);
  return cf;
}

void check_ccf_identities(const ControllerForm& cf) {
  const Field& f = cf.field;
  const std::size_t d = cf.delta;
  const Mat At = cf.A.transpose();
  const Mat Bt = cf.B.transpose();
  require((cf.A * Bt).is_zero(), "A B^t != 0");
  const Mat bbt = cf.B * Bt;
  for (std::size_t i = 0; i < cf.k; ++i) {
    for (std::size_t j = 0; j < cf.k; ++j) {
      const Elem want = (i == j && i < cf.r) ? 1 : 0;
      require(bbt.at(i, j) == want, "B B^t != diag(I_r, 0)");
    }
  }
  const Mat btb = Bt * cf.B;
  const Mat ata = At * cf.A;
  const Mat aat = cf.A * At;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const bool diag = i == j;
      const bool in_i = contains_index(cf.I_set, i + 1);
      const bool in_j = contains_index(cf.J_set, i + 1);
      require(btb.at(i, j) == ((diag && in_i) ? 1u : 0u), "B^t B diagonal does not match I");
      require(ata.at(i, j) == ((diag && !in_i) ? 1u : 0u), "A^t A diagonal does not match I");
      require(aat.at(i, j) == ((diag && !in_j) ? 1u : 0u), "A A^t diagonal does not match J");
    }
  }
  require(ata + btb == Mat::identity(f, d), "A^t A + B^t B != I");
  require(rank(cf.D) == cf.k, "D = G(0) does not have full row rank");
}

void check_transfer_function(const ControllerForm& cf) {
  const Field& f = cf.field;
  const std::size_t d = cf.delta;
  const int maxdeg = std::max(0, cf.encoder.max_degree());
  require(cf.D == cf.encoder.coefficient(0), "D != G(0)");
  Mat apow = Mat::identity(f, d);  // A^(l-1)
  for (std::size_t l = 1; l <= static_cast<std::size_t>(maxdeg) + d; ++l) {
    const Mat term = d == 0 ? Mat(f, cf.k, cf.n) : cf.B * apow * cf.C;
    require(term == cf.encoder.coefficient(l),
            "transfer function mismatch at z^" + std::to_string(l));
    if (d > 0) apow = apow * cf.A;
  }
}

Subspace c_const(const ControllerForm& cf) {
  const Subspace ker_b = Subspace::row_space(left_kernel(cf.B));
  const Subspace via_kernel = ker_b.dim() == 0 ? Subspace(cf.field, cf.n) : ker_b.image(cf.D);
  std::vector<Vec> const_rows;
  for (std::size_t i = cf.r; i < cf.k; ++i) const_rows.push_back(cf.D.row(i));
  const Subspace via_rows = Subspace::span(cf.field, cf.n, const_rows);
  require(via_kernel == via_rows, "C_const: (ker B) D differs from the constant rows");
  require(via_rows.dim() == cf.k - cf.r, "dim C_const != k - r");
  return via_rows;
}

Subspace c_big(const ControllerForm& cf) { return Subspace::row_space(cf.C.vstack(cf.D)); }

std::size_t r_hat(const ControllerForm& cf) { return c_big(cf).dim() - cf.k; }

Subspace delta_space(const ControllerForm& cf) {
  const std::size_t d = cf.delta;
  const Mat top = Mat::identity(cf.field, d).hstack(cf.A);
  const Mat bottom = Mat(cf.field, cf.k, d).hstack(cf.B);
  return Subspace::row_space(top.vstack(bottom));
}

Subspace delta_perp(const ControllerForm& cf) {
  const std::size_t d = cf.delta;
  const Subspace generic = delta_space(cf).perp();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d; ++i) {
    if (contains_index(cf.J_set, i + 1)) continue;
    Vec x(d, 0);
    x[i] = 1;
    gens.push_back(vec_concat(x, vec_neg(cf.field, vec_mat(cf.field, x, cf.A))));
  }
  const Subspace param = Subspace::span(cf.field, 2 * d, gens);
  require(param == generic, "Delta^perp parametrization differs from the orthogonal complement");
  return generic;
}

Mat phi_matrix(const ControllerForm& cf) { return cf.C.vstack(cf.B.transpose() * cf.D); }

Vec phi(const ControllerForm& cf, const Vec& x, const Vec& y) {
  if (x.size() != cf.delta || y.size() != cf.delta) throw UsageError("state has wrong length");
  return vec_mat(cf.field, vec_concat(x, y), phi_matrix(cf));
}

Subspace ker_phi_hom(const ControllerForm& cf) {
  return delta_space(cf).preimage(phi_matrix(cf), c_const(cf));
}

Subspace delta_minus(const ControllerForm& cf) {
  const std::size_t d = cf.delta;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < d; ++i) {
    if (contains_index(cf.I_set, i + 1)) continue;
    Vec v(2 * d, 0);
    v[d + i] = 1;
    gens.push_back(v);
  }
  return Subspace::span(cf.field, 2 * d, gens);
}

StateSpaces analyze(const ControllerForm& cf, std::optional<Subspace> delta_star) {
  const std::size_t d = cf.delta;
  const Field& f = cf.field;
  StateSpaces s{c_const(cf), c_big(cf), 0, phi_matrix(cf),
                delta_space(cf), delta_perp(cf), Subspace(f, 2 * d), Subspace(f, 2 * d),
                delta_minus(cf), Subspace(f, 2 * d)};
  s.r_hat = s.c_big.dim() - cf.k;
  s.ker_phi = s.delta.preimage(s.phi, s.c_const);
  s.ker_phi_perp = s.ker_phi.perp();

  require(s.c_big.contains(s.c_const), "C_const is not inside C_C");
  require(s.delta.dim() == d + cf.r, "dim Delta != delta + r");
  require(s.ker_phi.dim() + s.r_hat == d, "dim ker Phi != delta - r_hat");
  const Subspace im_btd = Subspace::row_space(cf.B.transpose() * cf.D);
  require(trivially_intersect(im_btd, s.c_const) &&
              im_btd.sum(s.c_const) == Subspace::row_space(cf.D),
          "im D != im B^tD (+) C_const");
  require(s.delta.image(s.phi).sum(s.c_const) == s.c_big, "phi(Delta) + C_const != C_C");
  require(trivially_intersect(s.delta, s.delta_minus) &&
              s.delta.dim() + s.delta_minus.dim() == 2 * d,
          "Delta (+) Delta^- != F");
  require(s.delta_minus.image(s.phi).dim() == 0, "phi does not vanish on Delta^-");

  if (delta_star) {
    if (delta_star->ambient() != 2 * d || !s.delta.contains(*delta_star) ||
        !trivially_intersect(*delta_star, s.ker_phi) ||
        delta_star->dim() + s.ker_phi.dim() != s.delta.dim()) {
      throw UsageError("supplied Delta* is not a complement of ker Phi in Delta");
    }
    s.delta_star = *delta_star;
  } else {
    s.delta_star = s.delta.complement_of(s.ker_phi);
  }
  require(s.delta_star.sum(s.ker_phi).sum(s.delta_minus).dim() == 2 * d &&
              s.delta_star.dim() + s.ker_phi.dim() + s.delta_minus.dim() == 2 * d,
          "Delta* (+) ker Phi (+) Delta^- != F");
  return s;
}

void check_block_duality(const ControllerForm& cf, const ControllerForm& dual) {
  require(cf.field == dual.field && cf.n == dual.n && cf.k + dual.k == cf.n,
          "dual pair has inconsistent shapes");
  require(c_big(cf).perp() == c_const(dual), "(C_C)^perp != dual C_const");
  require(c_big(dual).perp() == c_const(cf), "(dual C_C)^perp != C_const");
  require(Subspace::row_space(cf.D) == Subspace::row_space(left_kernel(dual.D.transpose())),
          "im D != ker Dhat^t");
  require(r_hat(cf) == dual.r, "r_hat differs from the number of nonzero dual indices");
  require(r_hat(dual) == cf.r, "dual r_hat differs from r");
}

}  // namespace convmacw
