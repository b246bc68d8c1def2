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

#include "convmacw/duality.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "convmacw/errors.hpp"

namespace convmacw {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IdentityViolation(what);
}

void guard(const std::string& what, std::uint64_t needed, std::uint64_t limit) {
  if (needed > limit) throw GuardExceeded(what, needed, limit);
}

Rational pow_rational(std::uint32_t q, std::size_t e) {
  return Rational(mpz_class(static_cast<unsigned long>(checked_power(q, e))));
}

Rational inv_pow(std::uint32_t q, std::size_t e) { return Rational(1) / pow_rational(q, e); }

Vec first_half(const Vec& xy, std::size_t d) {
  return Vec(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(d));
}

Vec second_half(const Vec& xy, std::size_t d) {
  return Vec(xy.begin() + static_cast<std::ptrdiff_t>(d), xy.end());
}

AdjMatrix::Key pair_key(const Vec& xy, std::size_t d, std::uint32_t q) {
  return {state_index(first_half(xy, d), q), state_index(second_half(xy, d), q)};
}

Vec pair_vector(std::uint32_t x, std::uint32_t y, std::size_t d, std::uint32_t q) {
  return vec_concat(state_vector(x, d, q), state_vector(y, d, q));
}

const WePoly& entry_at(const AdjMatrix& m, const Vec& xy) {
  const auto key = pair_key(xy, m.delta(), m.q());
  return m.at(key.first, key.second);
}

Mat block2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return a.hstack(b).vstack(c.hstack(d));
}

// Power-sum grids: entry (x, y) is sum_e c[e] zeta^e with integer c.
struct PowerGrid {
  std::uint32_t dim = 0;
  std::uint32_t p = 2;
  std::vector<std::int64_t> c;  // (x * dim + y) * p + e

  std::int64_t* cell(std::uint32_t x, std::uint32_t y) { return &c[(std::size_t{x} * dim + y) * p]; }
  const std::int64_t* cell(std::uint32_t x, std::uint32_t y) const {
    return &c[(std::size_t{x} * dim + y) * p];
  }
};

PowerGrid power_grid(const MacWMatrix& h) {
  PowerGrid g{h.dim(), h.p(), std::vector<std::int64_t>(std::size_t{h.dim()} * h.dim() * h.p(), 0)};
  for (std::uint32_t x = 0; x < h.dim(); ++x) {
    for (std::uint32_t y = 0; y < h.dim(); ++y) g.cell(x, y)[h.exponent(x, y)] = 1;
  }
  return g;
}

PowerGrid power_product(const PowerGrid& a, const PowerGrid& b) {
  const std::uint32_t n = a.dim;
  const std::uint32_t p = a.p;
  PowerGrid out{n, p, std::vector<std::int64_t>(std::size_t{n} * n * p, 0)};
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t z = 0; z < n; ++z) {
      const std::int64_t* az = a.cell(x, z);
      for (std::uint32_t y = 0; y < n; ++y) {
        const std::int64_t* bz = b.cell(z, y);
        std::int64_t* o = out.cell(x, y);
        for (std::uint32_t e1 = 0; e1 < p; ++e1) {
          if (az[e1] == 0) continue;
          for (std::uint32_t e2 = 0; e2 < p; ++e2) o[(e1 + e2) % p] += az[e1] * bz[e2];
        }
      }
    }
  }
  return out;
}

// Whether the grid equals `scale` times the 0/1 matrix with ones at (x, target[x]).
bool equals_scaled_permutation(const PowerGrid& g, std::int64_t scale,
                               const std::vector<std::uint32_t>& target) {
  for (std::uint32_t x = 0; x < g.dim; ++x) {
    for (std::uint32_t y = 0; y < g.dim; ++y) {
      std::vector<std::int64_t> v(g.cell(x, y), g.cell(x, y) + g.p);
      if (target[x] == y) v[0] -= scale;
      // sum c_e zeta^e = 0 iff all c_e coincide
      if (!std::all_of(v.begin(), v.end(), [&](std::int64_t c) { return c == v[0]; })) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> identity_perm(std::uint32_t n) {
  std::vector<std::uint32_t> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

RatPoly transform_entry(const RatPoly& f, std::size_t n, std::uint32_t q, std::size_t k) {
  return macwilliams_H(f, n, q) * inv_pow(q, k);
}

// Dense id grid over interned polynomials for fast repeated comparisons.
struct InternedGrid {
  std::uint32_t dim = 0;
  std::vector<std::uint32_t> ids;
};

std::pair<InternedGrid, InternedGrid> intern_pair(const AdjMatrix& a, const AdjMatrix& b) {
  std::map<WePoly, std::uint32_t> table;
  table[WePoly()] = 0;
  auto build = [&](const AdjMatrix& m) {
    InternedGrid g{m.dim(), std::vector<std::uint32_t>(std::size_t{m.dim()} * m.dim(), 0)};
    for (const auto& [key, w] : m.entries()) {
      auto it = table.try_emplace(w, static_cast<std::uint32_t>(table.size())).first;
      g.ids[std::size_t{key.first} * m.dim() + key.second] = it->second;
    }
    return g;
  };
  InternedGrid ga = build(a);
  InternedGrid gb = build(b);
  return {std::move(ga), std::move(gb)};
}

// Mismatches of a_{X,Y} against b_{XP,YP}, stopping once `stop_above` is exceeded.
std::size_t count_perm_mismatches(const InternedGrid& a, const InternedGrid& b,
                                  const std::vector<std::uint32_t>& image, std::size_t stop_above) {
  std::size_t bad = 0;
  const std::uint32_t n = a.dim;
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::size_t bx = std::size_t{image[x]} * n;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (a.ids[std::size_t{x} * n + y] != b.ids[bx + image[y]]) {
        if (++bad > stop_above) return bad;
      }
    }
  }
  return bad;
}

}  // namespace

// ---------------------------------------------------------------------------
// MacWilliams matrices

MacWMatrix MacWMatrix::build(const Field& field, std::size_t delta, const Mat& P,
                             std::uint32_t zeta_exponent) {
  if (P.rows() != delta || P.cols() != delta) throw UsageError("MacWilliams matrix needs a delta x delta P");
  if (!inverse(P)) throw UsageError("MacWilliams matrix needs an invertible P");
  const std::uint32_t p = field.p();
  if (zeta_exponent == 0 || zeta_exponent >= p) {
    throw UsageError("zeta exponent must lie in [1, p)");
  }
  const auto states = enumerate_vectors(field, delta);
  guard("q^delta MacWilliams matrix size", states.size(), 1u << 12);
  MacWMatrix h(P);
  h.delta_ = delta;
  h.p_ = p;
  h.q_ = field.q();
  h.dim_ = static_cast<std::uint32_t>(states.size());
  h.zeta_exp_ = zeta_exponent;
  h.e_.resize(std::size_t{h.dim_} * h.dim_);
  for (std::uint32_t x = 0; x < h.dim_; ++x) {
    const Vec xp = vec_mat(field, states[x], P);
    for (std::uint32_t y = 0; y < h.dim_; ++y) {
      const std::uint32_t t = field.trace(dot(field, xp, states[y]));
      h.e_[std::size_t{x} * h.dim_ + y] = static_cast<std::uint8_t>((zeta_exponent * t) % p);
    }
  }
  return h;
}

MacWMatrix MacWMatrix::identity(const Field& field, std::size_t delta, std::uint32_t zeta_exponent) {
  return build(field, delta, Mat::identity(field, delta), zeta_exponent);
}

CycloNum MacWMatrix::entry(std::uint32_t x, std::uint32_t y) const {
  return root_power(p_, exponent(x, y));
}

MacWMatrix MacWMatrix::permuted_rows(const std::vector<std::uint32_t>& perm, const Mat& new_P) const {
  MacWMatrix out = *this;
  out.P_ = new_P;
  for (std::uint32_t x = 0; x < dim_; ++x) {
    for (std::uint32_t y = 0; y < dim_; ++y) out.e_[std::size_t{x} * dim_ + y] = exponent(perm[x], y);
  }
  return out;
}

MacWMatrix MacWMatrix::permuted_cols(const std::vector<std::uint32_t>& perm, const Mat& new_P) const {
  MacWMatrix out = *this;
  out.P_ = new_P;
  for (std::uint32_t x = 0; x < dim_; ++x) {
    for (std::uint32_t y = 0; y < dim_; ++y) out.e_[std::size_t{x} * dim_ + y] = exponent(x, perm[y]);
  }
  return out;
}

void check_macw_identities(const Field& field, std::size_t delta, std::uint32_t zeta_exponent,
                           const std::vector<Mat>& samples, std::uint64_t limit) {
  guard("q^delta MacWilliams identity check", checked_power(field.q(), delta), limit);
  const MacWMatrix h = MacWMatrix::identity(field, delta, zeta_exponent);
  const std::uint32_t n = h.dim();
  const auto qd = static_cast<std::int64_t>(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) require(h.exponent(x, y) == h.exponent(y, x), "H is not symmetric");
  }
  const Mat minus_i = -Mat::identity(field, delta);
  const StatePermutation neg = make_state_permutation(minus_i);
  const PowerGrid g = power_grid(h);
  const PowerGrid g2 = power_product(g, g);
  require(equals_scaled_permutation(g2, qd, neg.image), "H^2 != P(-I)");
  const PowerGrid g4 = power_product(g2, g2);
  require(equals_scaled_permutation(g4, qd * qd, identity_perm(n)), "H^4 != I");

  for (const Mat& P : samples) {
    const MacWMatrix hp = MacWMatrix::build(field, delta, P, zeta_exponent);
    const StatePermutation sp = make_state_permutation(P);
    require(hp == h.permuted_rows(sp.image, P), "H(P) != P(P) H");
    const Mat r = *inverse(P.transpose());
    const StatePermutation sr = make_state_permutation(r);
    require(hp == h.permuted_cols(sr.preimage, P), "H(P) != H P((P^t)^-1)");
    const MacWMatrix hinv = MacWMatrix::build(field, delta, -P.transpose(), zeta_exponent);
    require(equals_scaled_permutation(power_product(power_grid(hp), power_grid(hinv)), qd,
                                      identity_perm(n)),
            "H(P)^-1 != H(-P^t)");
  }
}

// ---------------------------------------------------------------------------
// ell, Gamma and the transforms

RatGrid sandwich(const MacWMatrix& left, const AdjMatrix& m, const MacWMatrix& right) {
  if (left.dim() != m.dim() || right.dim() != m.dim() || left.p() != right.p()) {
    throw UsageError("sandwich: dimension mismatch");
  }
  const std::uint32_t n_states = m.dim();
  const std::uint32_t p = left.p();
  const std::size_t len = m.n() + 1;
  struct Term {
    std::uint32_t z1, z2;
    const WePoly* w;
  };
  std::vector<Term> terms;
  for (const auto& [key, w] : m.entries()) terms.push_back({key.first, key.second, &w});

  RatGrid out{n_states, std::vector<RatPoly>(std::size_t{n_states} * n_states)};
  std::vector<std::int64_t> bucket(p * len);
  for (std::uint32_t x = 0; x < n_states; ++x) {
    for (std::uint32_t y = 0; y < n_states; ++y) {
      std::fill(bucket.begin(), bucket.end(), 0);
      for (const Term& t : terms) {
        const std::uint32_t e = (left.exponent(x, t.z1) + right.exponent(t.z2, y)) % p;
        const auto& c = t.w->coeffs();
        for (std::size_t j = 0; j < c.size(); ++j) bucket[e * len + j] += c[j];
      }
      CycloPoly cp{p, m.q(), -2 * static_cast<int>(m.delta()), {}};
      for (std::size_t j = 0; j < len; ++j) {
        std::vector<Rational> by_power(p);
        for (std::uint32_t e = 0; e < p; ++e) by_power[e] = Rational(static_cast<long>(bucket[e * len + j]));
        cp.coeffs.push_back(CycloNum::from_power_sums(p, by_power));
      }
      cp.trim();
      out.cells[std::size_t{x} * n_states + y] = RatPoly(cp.to_rational());
    }
  }
  return out;
}

RatGrid ell_closed_form(const AdjMatrix& lambda, const ControllerForm& cf, const StateSpaces& s) {
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  const std::uint32_t n_states = lambda.dim();
  const RatPoly we_cc = RatPoly::from_we(we_of_affine(f, Vec(cf.n, 0), s.c_big.basis_vectors(), cf.n));
  const RatPoly on_perp = we_cc * inv_pow(q, s.r_hat);
  const RatPoly offset = we_cc * pow_rational(q, d - s.r_hat);
  const Rational denom = pow_rational(q, d) * Rational(static_cast<long>(q - 1));

  std::vector<std::pair<Vec, RatPoly>> support;
  for (const auto& [key, w] : lambda.entries()) {
    support.emplace_back(pair_vector(key.first, key.second, d, q), RatPoly::from_we(w));
  }
  RatGrid out{n_states, std::vector<RatPoly>(std::size_t{n_states} * n_states)};
  for (std::uint32_t x = 0; x < n_states; ++x) {
    for (std::uint32_t y = 0; y < n_states; ++y) {
      const Vec xy = pair_vector(x, y, d, q);
      RatPoly& cell = out.cells[std::size_t{x} * n_states + y];
      if (!s.ker_phi_perp.contains(xy)) continue;
      if (s.delta_perp.contains(xy)) {
        cell = on_perp;
        continue;
      }
      RatPoly sum;
      for (const auto& [z, w] : support) {
        if (dot(f, xy, z) == 0) sum += w;
      }
      cell = (sum * Rational(static_cast<long>(q)) - offset) * (Rational(1) / denom);
    }
  }
  return out;
}

RatGrid ell_matrix(const AdjMatrix& lambda, const ControllerForm& cf, const StateSpaces& s,
                   const MacWMatrix& h) {
  const RatGrid direct = sandwich(h, lambda, h);
  const RatGrid closed = ell_closed_form(lambda, cf, s);
  for (std::size_t i = 0; i < direct.cells.size(); ++i) {
    require(direct.cells[i] == closed.cells[i],
            "ell: direct product and closed form differ at cell " + std::to_string(i));
  }
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  const auto shifts = s.delta_perp.elements();
  for (std::uint32_t x = 0; x < direct.dim; ++x) {
    for (std::uint32_t y = 0; y < direct.dim; ++y) {
      const Vec xy = pair_vector(x, y, d, q);
      for (const Vec& uv : shifts) {
        const auto key = pair_key(vec_add(f, xy, uv), d, q);
        require(direct.at(key.first, key.second) == direct.at(x, y),
                "ell is not invariant under Delta^perp translation");
      }
    }
  }
  return direct;
}

RatGrid gamma_matrix(const AdjMatrix& lambda, const MacWMatrix& h, const MacWMatrix& h_inv) {
  return sandwich(h, lambda.transpose(), h_inv);
}

AdjMatrix transformed_matrix(const RatGrid& grid, std::size_t delta, std::uint32_t q,
                             std::size_t n, std::size_t k) {
  AdjMatrix out(delta, q, n);
  for (std::uint32_t x = 0; x < grid.dim; ++x) {
    for (std::uint32_t y = 0; y < grid.dim; ++y) {
      const RatPoly& c = grid.at(x, y);
      if (c.is_zero()) continue;
      out.set(x, y, transform_entry(c, n, q, k).to_we());
    }
  }
  return out;
}

DualPair prepare_dual_pair(const PolyMatrix& g, const std::optional<PolyMatrix>& dual_generator_in,
                           const DualityOptions& options) {
  ControllerForm cf = build_ccf(g);
  PolyMatrix gd = dual_generator(g);
  if (dual_generator_in) {
    if (dual_generator_in->field() != g.field() || dual_generator_in->cols() != g.cols() ||
        !same_code(*dual_generator_in, gd)) {
      throw UsageError("supplied dual generator does not generate the dual code");
    }
    gd = *dual_generator_in;
  }
  ControllerForm dual = build_ccf(gd);
  check_block_duality(cf, dual);
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  guard("q^(2 delta) matrix cells", checked_power(q, 2 * d), options.limit);

  StateSpaces spaces = analyze(cf);
  StateSpaces dual_spaces = analyze(dual);
  AdjMatrix lambda = adjacency_fast(cf, options.limit);
  AdjMatrix lambda_hat = adjacency_fast(dual, options.limit);
  MacWMatrix h = MacWMatrix::identity(f, d, options.zeta_exponent);
  const Mat minus_i = -Mat::identity(f, d);
  MacWMatrix h_inv = h.permuted_rows(make_state_permutation(minus_i).image, minus_i);
  require(h_inv == MacWMatrix::build(f, d, minus_i, options.zeta_exponent), "P(-I) H != H(-I)");

  RatGrid ell = ell_matrix(lambda, cf, spaces, h);
  RatGrid gamma = gamma_matrix(lambda, h, h_inv);
  const StatePermutation neg = make_state_permutation(minus_i);
  for (std::uint32_t x = 0; x < gamma.dim; ++x) {
    for (std::uint32_t y = 0; y < gamma.dim; ++y) {
      require(gamma.at(x, y) == ell.at(neg.image[y], x), "Gamma_{X,Y} != ell_{-Y,X}");
    }
  }
  AdjMatrix ell_t = transformed_matrix(ell, d, q, cf.n, cf.k);
  AdjMatrix trans = transformed_matrix(gamma, d, q, cf.n, cf.k);
  return DualPair{std::move(cf),     std::move(dual),  std::move(spaces), std::move(dual_spaces),
                  std::move(lambda), std::move(lambda_hat), std::move(h), std::move(h_inv),
                  std::move(ell),    std::move(gamma), std::move(ell_t), std::move(trans),
                  options};
}

void check_ell_transform_cases(const DualPair& dp) {
  const ControllerForm& cf = dp.cf;
  const StateSpaces& s = dp.spaces;
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  const Subspace& dual_const = dp.dual_spaces.c_const;
  const WePoly we_dual_const = we_of_affine(f, Vec(cf.n, 0), dual_const.basis_vectors(), cf.n);
  std::uint64_t zeros = 0;
  std::uint64_t consts = 0;
  const std::uint32_t n_states = dp.lambda.dim();
  for (std::uint32_t x = 0; x < n_states; ++x) {
    for (std::uint32_t y = 0; y < n_states; ++y) {
      const Vec xy = pair_vector(x, y, d, q);
      const WePoly& t = dp.ell_transformed.at(x, y);
      if (!s.ker_phi_perp.contains(xy)) {
        require(t.is_zero(), "transformed ell nonzero off (ker Phi)^perp");
        ++zeros;
        continue;
      }
      if (s.delta_perp.contains(xy)) {
        require(t == we_dual_const, "transformed ell on Delta^perp differs from we(dual C_const)");
        ++consts;
        continue;
      }
      const Subspace hyper = Subspace::span(f, 2 * d, {xy}).perp().intersect(s.delta_star);
      const Subspace target = hyper.image(s.phi).sum(s.c_const).perp();
      require(target.contains(dual_const) && target.dim() == dual_const.dim() + 1,
              "admissible c(X,Y) set has the wrong shape");
      target.for_each([&](const Vec& c) {
        if (dual_const.contains(c)) return;
        std::vector<Vec> gens = dual_const.basis_vectors();
        gens.push_back(c);
        const WePoly spanned = we_of_affine(f, Vec(cf.n, 0), gens, cf.n);
        const WePoly diff = spanned - we_dual_const;
        require(diff * 1 == t * static_cast<std::int64_t>(q - 1),
                "transformed ell differs from the coset form");
      });
      require(!t.is_zero(), "transformed ell vanishes inside (ker Phi)^perp");
    }
  }
  const std::uint64_t total = checked_power(q, 2 * d);
  require(zeros == total - checked_power(q, d + s.r_hat), "zero-entry census mismatch");
  require(consts == checked_power(q, d - cf.r), "we(dual C_const) census mismatch");
}

void check_zeta_independence(const DualPair& dp) {
  const Field& f = dp.cf.field;
  const std::size_t d = dp.cf.delta;
  const Mat minus_i = -Mat::identity(f, d);
  const StatePermutation neg = make_state_permutation(minus_i);
  for (std::uint32_t e = 1; e < f.p(); ++e) {
    if (e == dp.options.zeta_exponent) continue;
    const MacWMatrix h = MacWMatrix::identity(f, d, e);
    const MacWMatrix h_inv = h.permuted_rows(neg.image, minus_i);
    require(gamma_matrix(dp.lambda, h, h_inv) == dp.gamma,
            "H Lambda^t H^-1 depends on the choice of zeta (exponent " + std::to_string(e) + ")");
  }
}

// ---------------------------------------------------------------------------
// Matrix M and the weak identity

Mat matrix_M(const ControllerForm& cf, const ControllerForm& dual) {
  const Field& f = cf.field;
  const std::size_t d = cf.delta;
  if (dual.delta != d) throw UsageError("matrix_M: codes have different degrees");
  const Mat ct = cf.C.transpose();
  const Mat btd = cf.B.transpose() * cf.D;
  return block2(dual.C * ct, dual.C * btd.transpose(), dual.B.transpose() * dual.D * ct, Mat(f, d, d));
}

void check_matrix_M(const Mat& M, const DualPair& dp) {
  const StateSpaces& s = dp.spaces;
  const StateSpaces& sd = dp.dual_spaces;
  const Subspace im = Subspace::row_space(M);
  const Subspace ker = Subspace::row_space(left_kernel(M));
  require(s.ker_phi_perp.contains(im), "im M not inside (ker Phi)^perp");
  require(trivially_intersect(sd.ker_phi, sd.delta_minus) &&
              ker.contains(sd.ker_phi.sum(sd.delta_minus)),
          "dual ker Phi (+) dual Delta^- not inside ker M");
  require(trivially_intersect(im, s.delta_perp), "im M meets Delta^perp");
  require(sd.delta_star.image(M).dim() == sd.delta_star.dim(), "M not injective on dual Delta*");
  require(im.dim() == dp.cf.r + s.r_hat, "rank M != r + r_hat");
  require(im.sum(s.delta_perp) == s.ker_phi_perp && im.dim() + s.delta_perp.dim() == s.ker_phi_perp.dim(),
          "im M (+) Delta^perp != (ker Phi)^perp");
  require(sd.delta_star.image(M) == im, "M(dual Delta*) != im M");
}

std::size_t check_ell_transport(const Mat& M, const DualPair& dp) {
  const Field& f = dp.cf.field;
  std::size_t count = 0;
  dp.dual_spaces.delta.for_each([&](const Vec& xy) {
    const Vec img = vec_mat(f, xy, M);
    require(entry_at(dp.lambda_hat, xy) == entry_at(dp.ell_transformed, img),
            "lambda_hat_{X,Y} != q^-k H(ell_{(X,Y)M})");
    ++count;
  });
  return count;
}

WeakIdentityResult weak_identity_check(const DualPair& dp,
                                       const std::optional<Subspace>& dual_delta_star) {
  const ControllerForm& cf = dp.cf;
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  const StateSpaces& s = dp.spaces;
  const StateSpaces sd = dual_delta_star ? analyze(dp.dual, dual_delta_star) : dp.dual_spaces;
  const Mat M = matrix_M(cf, dp.dual);

  const Subspace g_comp = Subspace::full(f, 2 * d).complement_of(s.ker_phi_perp);
  const Mat source = sd.delta_star.basis().vstack(sd.ker_phi.basis()).vstack(sd.delta_minus.basis());
  const Mat target = (sd.delta_star.basis() * M).vstack(s.delta_perp.basis()).vstack(g_comp.basis());
  require(source.rows() == 2 * d && target.rows() == 2 * d, "diagram columns have mismatched dimensions");
  const auto source_inv = inverse(source);
  require(source_inv.has_value(), "dual Delta* (+) ker Phi (+) Delta^- is not direct");
  const Mat fmat = *source_inv * target;
  const auto f_inv = inverse(fmat);
  require(f_inv.has_value(), "f is not an automorphism");

  WeakIdentityResult res{fmat, 0, 0, false};
  const std::uint32_t n_states = dp.lambda.dim();
  for (std::uint32_t x = 0; x < n_states; ++x) {
    for (std::uint32_t y = 0; y < n_states; ++y) {
      const Vec xy = pair_vector(x, y, d, q);
      ++res.comparisons;
      if (dp.lambda_hat.at(x, y) != entry_at(dp.ell_transformed, vec_mat(f, xy, fmat))) ++res.mismatches;
      const Vec swapped = vec_concat(vec_neg(f, second_half(xy, d)), first_half(xy, d));
      if (entry_at(dp.lambda_hat, vec_mat(f, swapped, *f_inv)) != dp.transformed.at(x, y)) ++res.mismatches;
    }
  }
  res.multiset_equal = dp.lambda_hat.sorted_entries() == dp.transformed.sorted_entries();
  require(res.mismatches == 0, "weak identity fails at " + std::to_string(res.mismatches) + " positions");
  require(res.multiset_equal, "entries of lambda_hat and the transformed matrix differ as multisets");
  return res;
}

std::size_t witness_mismatches(const DualPair& dp, const Mat& P) {
  const StatePermutation sp = make_state_permutation(P);
  const auto [a, b] = intern_pair(dp.lambda_hat, dp.transformed);
  return count_perm_mismatches(a, b, sp.image, static_cast<std::size_t>(-1));
}

namespace {

std::size_t corollary_mismatches(const DualPair& dp, const Mat& P) {
  const Field& f = dp.cf.field;
  const std::size_t d = dp.cf.delta;
  const MacWMatrix hp = MacWMatrix::build(f, d, P, dp.options.zeta_exponent);
  const MacWMatrix hp_inv = MacWMatrix::build(f, d, -P.transpose(), dp.options.zeta_exponent);
  const AdjMatrix t = transformed_matrix(sandwich(hp, dp.lambda.transpose(), hp_inv), d, f.q(),
                                         dp.cf.n, dp.cf.k);
  std::size_t bad = 0;
  for (std::uint32_t x = 0; x < t.dim(); ++x) {
    for (std::uint32_t y = 0; y < t.dim(); ++y) bad += t.at(x, y) != dp.lambda_hat.at(x, y);
  }
  return bad;
}

}  // namespace

TheoremResult theorem_q(const DualPair& dp) {
  const ControllerForm& cf = dp.cf;
  const ControllerForm& du = dp.dual;
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const std::size_t d = cf.delta;
  if (dp.spaces.r_hat != d) {
    throw PreconditionError("theorem_q needs r_hat = delta (r_hat = " + std::to_string(dp.spaces.r_hat) +
                            ", delta = " + std::to_string(d) + "); use theorem_p or the search");
  }
  const Mat bdc = du.B.transpose() * du.D * cf.C.transpose();
  const Mat Q = -bdc;
  const auto q_inv = inverse(Q);
  require(q_inv.has_value(), "Q is singular");
  const Mat cct = du.C * cf.C.transpose();
  require(du.C * cf.D.transpose() * cf.B + cct * cf.A == -bdc, "Chat D^t B + Chat C^t A != -Bhat^t Dhat C^t");

  const Mat M = matrix_M(cf, du);
  const Mat zero(f, d, d);
  const Mat M1 = block2(-cct, cct * cf.A, zero, zero);
  const Subspace im1 = Subspace::row_space(M1);
  const Subspace ker1 = Subspace::row_space(left_kernel(M1));
  require(dp.spaces.delta_perp.contains(im1), "im M1 not inside Delta^perp");
  require(trivially_intersect(dp.dual_spaces.ker_phi, ker1), "dual ker Phi meets ker M1");
  require(im1.dim() == d - cf.r, "rank M1 != delta - r");
  const Mat sum = M + M1;
  require(sum == block2(zero, Q, -Q, zero), "M + M1 != [[0, Q], [-Q, 0]]");

  weak_identity_check(dp, ker1);

  TheoremResult res{Q, 0, 0};
  const std::uint32_t n_states = dp.lambda.dim();
  for (std::uint32_t x = 0; x < n_states; ++x) {
    for (std::uint32_t y = 0; y < n_states; ++y) {
      const Vec xy = pair_vector(x, y, d, q);
      require(dp.lambda_hat.at(x, y) == entry_at(dp.ell_transformed, vec_mat(f, xy, sum)),
              "lambda_hat_{X,Y} != q^-k H(ell_{f(X,Y)}) for f = M + M1");
      const Vec pre = vec_mat(f, vec_concat(vec_neg(f, second_half(xy, d)), first_half(xy, d)), *inverse(sum));
      const Vec expect = vec_concat(vec_mat(f, first_half(xy, d), *q_inv), vec_mat(f, second_half(xy, d), *q_inv));
      require(pre == expect, "f^-1(-Y, X) != (X Q^-1, Y Q^-1)");
    }
  }
  res.comparisons = std::size_t{n_states} * n_states;
  res.mismatches = witness_mismatches(dp, Q);
  res.mismatches += corollary_mismatches(dp, Q);
  require(res.mismatches == 0, "identity with Q fails at " + std::to_string(res.mismatches) + " positions");
  return res;
}

TheoremResult theorem_p(const DualPair& dp) {
  const ControllerForm& cf = dp.cf;
  const ControllerForm& du = dp.dual;
  const std::size_t d = cf.delta;
  if (cf.r != d) {
    throw PreconditionError("theorem_p needs r = delta (r = " + std::to_string(cf.r) +
                            ", delta = " + std::to_string(d) + "); use theorem_q or the search");
  }
  const Mat P = -(du.C * cf.D.transpose() * cf.B);
  require(inverse(P).has_value(), "P is singular");
  require(P == (-(cf.B.transpose() * cf.D * du.C.transpose())).transpose(),
          "P differs from the transpose of the dual Q");
  TheoremResult res{P, 0, std::size_t{dp.lambda.dim()} * dp.lambda.dim()};
  res.mismatches = witness_mismatches(dp, P) + corollary_mismatches(dp, P);
  require(res.mismatches == 0, "identity with P fails at " + std::to_string(res.mismatches) + " positions");
  return res;
}

SearchResult conjecture_search(const DualPair& dp, std::uint64_t limit) {
  SearchResult res;
  const auto [a, b] = intern_pair(dp.lambda_hat, dp.transformed);
  for_each_pgl_representative(
      dp.cf.field, dp.cf.delta,
      [&](const Mat& P) {
        ++res.candidates_tried;
        ++res.representatives;
        const StatePermutation sp = make_state_permutation(P);
        if (count_perm_mismatches(a, b, sp.image, 0) == 0) {
          res.witness = P;
          return false;
        }
        return true;
      },
      limit);
  res.exhausted = !res.witness.has_value();
  return res;
}

std::size_t unit_memory_check(const DualPair& dp) {
  const ControllerForm& cf = dp.cf;
  if (cf.delta != 1) throw PreconditionError("unit-memory formulas need delta = 1");
  const Field& f = cf.field;
  const std::uint32_t q = f.q();
  const AdjMatrix& lam = dp.lambda;
  const WePoly l00 = lam.at(0, 0);
  const WePoly l01 = lam.at(0, 1);
  WePoly row1;
  for (std::uint32_t y = 0; y < q; ++y) row1 += lam.at(1, y);
  const Rational scale = inv_pow(q, cf.k + 1);
  const auto qq = static_cast<std::int64_t>(q);
  std::size_t bad = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    for (std::uint32_t y = 0; y < q; ++y) {
      WePoly inner = (x == 0 && y == 0) ? l00 + (l01 + row1) * (qq - 1)
                                        : l00 + lam.at(x, y) * qq - l01 - row1;
      const WePoly formula = (macwilliams_H(RatPoly::from_we(inner), cf.n, q) * scale).to_we();
      const WePoly& expected = dp.lambda_hat.at(x, y);
      bad += formula != expected;
      bad += dp.transformed.at(x, y) != expected;
      bad += dp.ell_transformed.at(f.neg(y), x) != expected;
    }
  }
  require(bad == 0, "unit-memory formulas disagree at " + std::to_string(bad) + " comparisons");
  return bad;
}

bool block_macwilliams_check(const Mat& generator) {
  const Field& f = generator.field();
  const std::uint32_t q = f.q();
  const std::size_t n = generator.cols();
  const Subspace code = Subspace::row_space(generator);
  const WePoly we_c = we_of_affine(f, Vec(n, 0), code.basis_vectors(), n);
  std::vector<std::int64_t> counts(n + 1, 0);
  const auto rows = code.basis_vectors();
  for (const Vec& v : enumerate_vectors(f, n)) {
    bool orth = true;
    for (const Vec& g : rows) {
      if (dot(f, v, g) != 0) {
        orth = false;
        break;
      }
    }
    if (orth) ++counts[hamming_weight(v)];
  }
  const WePoly we_perp(std::move(counts));
  const RatPoly lhs = macwilliams_H(RatPoly::from_we(we_c), n, q) * inv_pow(q, code.dim());
  return lhs == RatPoly::from_we(we_perp);
}

VerifyMode parse_verify_mode(const std::string& s) {
  if (s == "auto") return VerifyMode::Auto;
  if (s == "weak") return VerifyMode::Weak;
  if (s == "theorem-q") return VerifyMode::TheoremQ;
  if (s == "theorem-p") return VerifyMode::TheoremP;
  if (s == "search") return VerifyMode::Search;
  if (s == "unit-memory") return VerifyMode::UnitMemory;
  throw UsageError("unknown verify mode '" + s + "'");
}

DualityReport verify(const DualPair& dp, VerifyMode mode, const std::optional<Mat>& check_witness) {
  const auto start = std::chrono::steady_clock::now();
  const ControllerForm& cf = dp.cf;
  const std::size_t d = cf.delta;
  const std::size_t r = cf.r;
  const std::size_t rh = dp.spaces.r_hat;
  DualityReport rep;
  rep.profile = cf.profile;
  rep.dual_profile = dp.dual.profile;
  rep.r_hat = rh;
  rep.verdict = "verified";

  auto structural = [&]() {
    const Mat M = matrix_M(cf, dp.dual);
    check_matrix_M(M, dp);
    rep.checks.push_back("matrix-M");
    check_ell_transport(M, dp);
    rep.checks.push_back("ell-transport");
    check_ell_transform_cases(dp);
    rep.checks.push_back("ell-transform-cases");
    weak_identity_check(dp);
    rep.checks.push_back("weak-identity");
    check_zeta_independence(dp);
    rep.checks.push_back("zeta-independence");
    if (d == 0) {
      require(block_macwilliams_check(cf.D), "block MacWilliams identity fails");
      rep.checks.push_back("block-macwilliams");
    }
  };
  auto run_q = [&]() {
    const TheoremResult t = theorem_q(dp);
    rep.witness = t.witness;
    rep.checks.push_back("theorem-q");
    if (r == d) {
      theorem_p(dp);
      rep.checks.push_back("theorem-p");
    }
  };
  auto run_search = [&]() {
    const SearchResult s = conjecture_search(dp);
    rep.search_candidates = s.candidates_tried;
    rep.theorem_used = "conjecture-search";
    rep.checks.push_back("search");
    if (s.witness) {
      rep.witness = s.witness;
    } else {
      rep.verdict = "counterexample-candidate";
      rep.entry_mismatch_count = witness_mismatches(dp, Mat::identity(cf.field, d));
    }
  };

  switch (mode) {
    case VerifyMode::Auto:
      structural();
      if (d == 1) {
        unit_memory_check(dp);
        rep.checks.push_back("unit-memory");
        run_q();
        rep.theorem_used = "delta=1";
      } else if (d == 0) {
        run_q();
        rep.theorem_used = "delta=0";
      } else if (rh == d) {
        run_q();
        rep.theorem_used = "r_hat=delta";
      } else if (r == d) {
        rep.witness = theorem_p(dp).witness;
        rep.checks.push_back("theorem-p");
        rep.theorem_used = "r=delta";
      } else {
        run_search();
      }
      break;
    case VerifyMode::Weak:
      structural();
      rep.theorem_used = "multiset-only";
      break;
    case VerifyMode::TheoremQ:
      run_q();
      rep.theorem_used = "r_hat=delta";
      break;
    case VerifyMode::TheoremP:
      rep.witness = theorem_p(dp).witness;
      rep.checks.push_back("theorem-p");
      rep.theorem_used = "r=delta";
      break;
    case VerifyMode::Search:
      run_search();
      break;
    case VerifyMode::UnitMemory:
      unit_memory_check(dp);
      rep.checks.push_back("unit-memory");
      rep.witness = Mat::identity(cf.field, d);
      rep.theorem_used = "delta=1";
      break;
  }

  if (check_witness) {
    if (check_witness->rows() != d || check_witness->cols() != d || !inverse(*check_witness)) {
      throw UsageError("witness must be an invertible delta x delta matrix");
    }
    const std::size_t bad = witness_mismatches(dp, *check_witness);
    rep.checks.push_back("check-witness");
    if (bad == 0) {
      if (rep.verdict == "counterexample-candidate") {
        throw IdentityViolation("search missed a valid witness");
      }
      if (!rep.witness) rep.witness = check_witness;
    } else {
      rep.verdict = "witness-rejected";
      rep.witness = check_witness;
      rep.entry_mismatch_count = bad;
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace convmacw
