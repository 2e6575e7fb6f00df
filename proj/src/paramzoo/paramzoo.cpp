/*
   Copyright 2026 The isogram authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "paramzoo/paramzoo.hpp"

#include <stdexcept>

namespace isogram::paramzoo {

QuadForm QuadForm::diagonal(std::vector<int> entries) {
  QuadForm q;
  q.kind = Kind::Diagonal;
  q.size = (int)entries.size();
  q.diag = std::move(entries);
  return q;
}

QuadForm QuadForm::hyperbolic(int size) {
  if (size < 2 || size % 2)
    throw std::invalid_argument("QuadForm::hyperbolic: size must be even");
  QuadForm q;
  q.kind = Kind::Hyperbolic;
  q.size = size;
  return q;
}

QuadForm QuadForm::alternating(int size) {
  std::vector<int> d((std::size_t)size);
  for (int i = 0; i < size; ++i) d[(std::size_t)i] = (i % 2 == 0) ? -1 : 1;
  return diagonal(std::move(d));
}

QuadForm QuadForm::signature5() { return diagonal({1, -1, -1, 1, -1}); }

u64 QuadForm::dot(std::span<const u64> a, std::span<const u64> b,
                  const PrimeField& f) const {
  if ((int)a.size() != size || (int)b.size() != size)
    throw std::invalid_argument("QuadForm::dot: length mismatch");
  u64 acc = 0;
  if (kind == Kind::Diagonal) {
    for (int i = 0; i < size; ++i) {
      u64 t = f.mul(a[(std::size_t)i], b[(std::size_t)i]);
      acc = diag[(std::size_t)i] > 0 ? f.add(acc, t) : f.sub(acc, t);
    }
  } else {
    const int h = size / 2;
    for (int i = 0; i < h; ++i) {
      acc = f.add(acc, f.mul(a[(std::size_t)i], b[(std::size_t)(i + h)]));
      acc = f.add(acc, f.mul(a[(std::size_t)(i + h)], b[(std::size_t)i]));
    }
  }
  return acc;
}

Poly QuadForm::dot(std::span<const Poly> a, std::span<const Poly> b) const {
  if ((int)a.size() != size || (int)b.size() != size)
    throw std::invalid_argument("QuadForm::dot: length mismatch");
  Poly acc = Poly::zero(a[0].ring());
  if (kind == Kind::Diagonal) {
    for (int i = 0; i < size; ++i) {
      Poly t = a[(std::size_t)i] * b[(std::size_t)i];
      if (diag[(std::size_t)i] > 0) acc += t;
      else acc -= t;
    }
  } else {
    const int h = size / 2;
    for (int i = 0; i < h; ++i) {
      acc += a[(std::size_t)i] * b[(std::size_t)(i + h)];
      acc += a[(std::size_t)(i + h)] * b[(std::size_t)i];
    }
  }
  return acc;
}

FpMatrix QuadForm::matrix(const PrimeField& f) const {
  FpMatrix q((std::size_t)size, (std::size_t)size);
  if (kind == Kind::Diagonal) {
    for (int i = 0; i < size; ++i)
      q.at((std::size_t)i, (std::size_t)i) =
          diag[(std::size_t)i] > 0 ? 1 : f.neg(1);
  } else {
    const int h = size / 2;
    for (int i = 0; i < h; ++i) {
      q.at((std::size_t)i, (std::size_t)(i + h)) = 1;
      q.at((std::size_t)(i + h), (std::size_t)i) = 1;
    }
  }
  return q;
}

// ---------------- PhvLayout ----------------

PhvLayout::PhvLayout(int n_) : n(n_) {
  // n = 2 is degenerate but well formed: P12 and H12, no V coordinates
  if (n < 2) throw std::invalid_argument("PhvLayout: n must be >= 2");
}

int PhvLayout::count() const { return n * n * (n - 1) / 2; }

namespace {
int pair_rank(int n, int i, int j) {
  // 1-based i < j, lexicographic
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}
}  // namespace

int PhvLayout::pidx(int i, int j) const {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("pidx: need i<j");
  return pair_rank(n, i, j);
}

int PhvLayout::hidx(int i, int j) const {
  return n * (n - 1) / 2 + pidx(i, j);
}

int PhvLayout::vidx(int i, int j, int k) const {
  if (!(1 <= i && i <= n) || !(1 <= j && j < k && k <= n) || j == i || k == i)
    throw std::invalid_argument("vidx: need j<k distinct from i");
  // rank of (j,k) among pairs from [n] \ {i}
  auto shift = [i](int t) { return t > i ? t - 1 : t; };
  const int m = n - 1;
  const int a = shift(j), b = shift(k);
  return n * (n - 1) + (i - 1) * m * (m - 1) / 2 + pair_rank(m, a, b);
}

int PhvLayout::vidx_signed(int i, int j, int k, int& sign) const {
  sign = 1;
  if (j > k) { std::swap(j, k); sign = -1; }
  return vidx(i, j, k);
}

std::vector<std::string> PhvLayout::names() const {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back("P" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back("H" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (j == i || k == i) continue;
        out.push_back("V" + std::to_string(i) + std::to_string(j) +
                      std::to_string(k));
      }
  return out;
}

u64 PHVPoint::P(int i, int j) const {
  return values[(std::size_t)PhvLayout(n).pidx(std::min(i, j), std::max(i, j))];
}
u64 PHVPoint::H(int i, int j) const {
  return values[(std::size_t)PhvLayout(n).hidx(std::min(i, j), std::max(i, j))];
}
u64 PHVPoint::V(int i, int j, int k, const PrimeField& f) const {
  int sign;
  const u64 v = values[(std::size_t)PhvLayout(n).vidx_signed(i, j, k, sign)];
  return sign > 0 ? v : f.neg(v);
}

// ---------------- null cone ----------------

NullConeConfig NullConeConfig::random(int n, const PrimeField& f, CounterRng& rng) {
  NullConeConfig c;
  c.n = n;
  c.params.resize((std::size_t)7 * n);
  for (auto& v : c.params) v = f.random(rng);
  return c;
}

namespace {

// p0..p4 and w0..w4 of one field from its seven parameters
void pw_coords(const PrimeField& F, std::span<const u64> t, std::span<u64> p,
               std::span<u64> w) {
  const u64 a = t[0], b = t[1], c = t[2], d = t[3], e = t[4], f = t[5], g = t[6];
  auto m2 = [&](u64 x, u64 y) { return F.mul(x, y); };
  auto m3 = [&](u64 x, u64 y, u64 z) { return F.mul(F.mul(x, y), z); };
  const u64 abd = m3(a, b, d), ace = m3(a, c, e), be = m2(b, e), cd = m2(c, d);
  p[0] = F.add(F.sub(F.add(abd, ace), be), cd);
  p[1] = F.add(F.add(F.sub(F.neg(abd), ace), be), cd);
  p[2] = F.neg(F.mul(2 % F.modulus(), m2(c, e)));
  const u64 bcd = m3(b, c, d), cce = m3(c, c, e), ad = m2(a, d);
  p[3] = F.add(F.sub(F.add(bcd, cce), ad), e);
  p[4] = F.add(F.sub(F.sub(F.neg(bcd), cce), ad), e);
  const u64 abf = m3(a, b, f), acg = m3(a, c, g), bg = m2(b, g), cf = m2(c, f);
  w[0] = F.add(F.sub(F.add(abf, acg), bg), cf);
  w[1] = F.add(F.add(F.sub(F.neg(abf), acg), bg), cf);
  w[2] = F.neg(F.mul(2 % F.modulus(), m2(c, g)));
  const u64 bcf = m3(b, c, f), ccg = m3(c, c, g), af = m2(a, f);
  w[3] = F.add(F.sub(F.add(bcf, ccg), af), g);
  w[4] = F.add(F.sub(F.sub(F.neg(bcf), ccg), af), g);
}

}  // namespace

PWConfiguration nullcone_point(const NullConeConfig& cfg, const PrimeField& f) {
  if ((int)cfg.params.size() != 7 * cfg.n)
    throw std::invalid_argument("nullcone_point: expected 7 parameters per field");
  PWConfiguration out;
  out.n = cfg.n;
  out.r = 5;
  out.form = QuadForm::signature5();
  out.P.assign((std::size_t)cfg.n, std::vector<u64>(5, 0));
  out.W.assign((std::size_t)cfg.n, std::vector<u64>(5, 0));
  for (int i = 0; i < cfg.n; ++i)
    pw_coords(f, std::span<const u64>(cfg.params).subspan((std::size_t)7 * i, 7),
              out.P[(std::size_t)i], out.W[(std::size_t)i]);
  return out;
}

FpMatrix gram_from_pw(const PWConfiguration& cfg, const PrimeField& f) {
  const int m = 2 * cfg.n;
  std::vector<std::span<const u64>> rows((std::size_t)m);
  for (int i = 0; i < cfg.n; ++i) {
    rows[(std::size_t)(2 * i)] = cfg.P[(std::size_t)i];
    rows[(std::size_t)(2 * i + 1)] = cfg.W[(std::size_t)i];
  }
  FpMatrix x((std::size_t)m, (std::size_t)m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      const u64 v = cfg.form.dot(rows[(std::size_t)i], rows[(std::size_t)j], f);
      x.at((std::size_t)i, (std::size_t)j) = v;
      x.at((std::size_t)j, (std::size_t)i) = v;
    }
  return x;
}

std::optional<PHVPoint> invariants_from_gram(const FpMatrix& x, int n,
                                             const PrimeField& f) {
  if (x.rows() != (std::size_t)(2 * n) || x.cols() != (std::size_t)(2 * n))
    throw std::invalid_argument("invariants_from_gram: expected 2n x 2n matrix");
  PhvLayout lay(n);
  PHVPoint out;
  out.n = n;
  out.values.assign((std::size_t)lay.count(), 0);
  auto e = [&](int i, int j) {  // 1-based
    return x.at((std::size_t)(i - 1), (std::size_t)(j - 1));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const u64 p = e(2 * i - 1, 2 * j - 1);
      out.values[(std::size_t)lay.pidx(i, j)] = p;
      const u64 h = f.sub(f.mul(e(2 * i - 1, 2 * j - 1), e(2 * i, 2 * j)),
                          f.mul(e(2 * i, 2 * j - 1), e(2 * j, 2 * i - 1)));
      out.values[(std::size_t)lay.hidx(i, j)] = h;
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (j == i || k == i) continue;
        const u64 den = e(2 * j - 1, 2 * k - 1);
        if (den == 0) return std::nullopt;
        const u64 num = f.sub(f.mul(e(2 * i, 2 * j - 1), e(2 * k - 1, 2 * i - 1)),
                              f.mul(e(2 * i, 2 * k - 1), e(2 * j - 1, 2 * i - 1)));
        out.values[(std::size_t)lay.vidx(i, j, k)] = f.mul(num, f.inv(den));
      }
  return out;
}

// ---------------- spinor ----------------

SpinorConfig SpinorConfig::random(int n, const PrimeField& f, CounterRng& rng) {
  SpinorConfig c;
  c.n = n;
  c.u.resize((std::size_t)n);
  c.ub.resize((std::size_t)n);
  c.v.resize((std::size_t)n);
  for (int i = 0; i < n; ++i) {
    c.u[(std::size_t)i] = {f.random(rng), f.random(rng)};
    c.ub[(std::size_t)i] = {f.random(rng), f.random(rng)};
    c.v[(std::size_t)i] = {f.random(rng), f.random(rng)};
  }
  return c;
}

namespace {
u64 det2(const std::array<u64, 2>& a, const std::array<u64, 2>& b,
         const PrimeField& f) {
  return f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]));
}
}  // namespace

u64 bracket_uu(const SpinorConfig& c, int i, int j, const PrimeField& f) {
  return det2(c.u[(std::size_t)(i - 1)], c.u[(std::size_t)(j - 1)], f);
}
u64 bracket_uub(const SpinorConfig& c, int i, int s, const PrimeField& f) {
  return det2(c.u[(std::size_t)(i - 1)], c.ub[(std::size_t)(s - 1)], f);
}
u64 bracket_vv(const SpinorConfig& c, int i, int j, const PrimeField& f) {
  return det2(c.v[(std::size_t)(i - 1)], c.v[(std::size_t)(j - 1)], f);
}

namespace {

// 2x4 block of plus or minus type for one field
std::array<std::array<u64, 4>, 2> ypm_block(const SpinorConfig& c, int i, bool plus,
                                            const PrimeField& f) {
  const auto& u = c.u[(std::size_t)i];
  const auto& ub = c.ub[(std::size_t)i];
  const auto& v = c.v[(std::size_t)i];
  auto row = [&](const std::array<u64, 2>& s) -> std::array<u64, 4> {
    if (plus)
      return {f.mul(s[0], v[0]), f.mul(s[0], v[1]), f.mul(s[1], v[1]),
              f.neg(f.mul(s[1], v[0]))};
    return {f.mul(s[0], v[0]), f.neg(f.mul(s[1], v[0])), f.mul(s[1], v[1]),
            f.mul(s[0], v[1])};
  };
  return {row(u), row(ub)};
}

FpMatrix stacked_gram(const SpinorConfig& cfg, const std::vector<bool>& plus,
                      const PrimeField& f) {
  const int n = cfg.n;
  std::vector<std::array<u64, 4>> rows;
  rows.reserve((std::size_t)(2 * n));
  for (int i = 0; i < n; ++i) {
    auto blk = ypm_block(cfg, i, plus[(std::size_t)i], f);
    rows.push_back(blk[0]);
    rows.push_back(blk[1]);
  }
  auto qdot = [&](const std::array<u64, 4>& a, const std::array<u64, 4>& b) {
    return f.add(f.add(f.mul(a[0], b[2]), f.mul(a[1], b[3])),
                 f.add(f.mul(a[2], b[0]), f.mul(a[3], b[1])));
  };
  FpMatrix x((std::size_t)(2 * n), (std::size_t)(2 * n));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i; j < 2 * n; ++j) {
      const u64 v = qdot(rows[(std::size_t)i], rows[(std::size_t)j]);
      x.at((std::size_t)i, (std::size_t)j) = v;
      x.at((std::size_t)j, (std::size_t)i) = v;
    }
  return x;
}

}  // namespace

std::optional<SpinorPoint> spinor_point(const SpinorConfig& cfg, const PrimeField& f) {
  SpinorPoint out;
  out.gram = stacked_gram(cfg, std::vector<bool>((std::size_t)cfg.n, true), f);
  auto inv = invariants_from_gram(out.gram, cfg.n, f);
  if (!inv) return std::nullopt;
  out.phv = std::move(*inv);
  return out;
}

// ---------------- two-point ----------------

std::optional<std::vector<u64>> twopoint_coords(const PHVPoint& p, const PrimeField& f) {
  PhvLayout lay(p.n);
  std::vector<u64> z;
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) {
      const u64 pv = p.values[(std::size_t)lay.pidx(i, j)];
      if (pv == 0) return std::nullopt;
      const u64 h = p.values[(std::size_t)lay.hidx(i, j)];
      z.push_back(f.mul(h, f.inv(f.pow(pv, 3))));
    }
  return z;
}

std::optional<std::vector<u64>> twopoint_reciprocal(const PHVPoint& p,
                                                    const PrimeField& f) {
  PhvLayout lay(p.n);
  std::vector<u64> z;
  for (int i = 1; i <= p.n; ++i)
    for (int j = i + 1; j <= p.n; ++j) {
      const u64 h = p.values[(std::size_t)lay.hidx(i, j)];
      if (h == 0) return std::nullopt;
      const u64 pv = p.values[(std::size_t)lay.pidx(i, j)];
      z.push_back(f.mul(f.pow(pv, 3), f.inv(h)));
    }
  return z;
}

std::optional<std::vector<u64>> cubed_grassmannian_point(const SpinorConfig& cfg,
                                                         const PrimeField& f) {
  std::vector<u64> y;
  for (int s = 1; s <= cfg.n; ++s)
    for (int t = s + 1; t <= cfg.n; ++t) {
      const u64 st = bracket_uu(cfg, s, t, f);
      if (st == 0) return std::nullopt;
      const u64 num = f.mul(bracket_uub(cfg, s, s, f), bracket_uub(cfg, t, t, f));
      y.push_back(f.mul(num, f.inv(f.pow(st, 3))));
    }
  return y;
}

u64 cubed_grassmannian_relation(std::span<const u64> y, const PrimeField& f) {
  if (y.size() < 6)
    throw std::invalid_argument("cubed_grassmannian_relation: need six coordinates");
  const u64 y12 = y[0], y13 = y[1], y14 = y[2], y23 = y[3], y24 = y[4], y34 = y[5];
  auto P = [&](u64 a, unsigned e) { return f.pow(a, e); };
  auto M = [&](std::initializer_list<u64> vs) {
    u64 r = 1;
    for (u64 v : vs) r = f.mul(r, v);
    return r;
  };
  u64 acc = 0;
  auto add = [&](long long c, u64 m) {
    const u64 cm = f.mul(f.from_int(c < 0 ? -c : c), m);
    acc = c < 0 ? f.sub(acc, cm) : f.add(acc, cm);
  };
  add(1, M({P(y12, 3), P(y13, 3), P(y24, 3), P(y34, 3)}));
  add(-1, M({P(y12, 3), P(y14, 3), P(y23, 3), P(y34, 3)}));
  add(1, M({P(y13, 3), P(y14, 3), P(y23, 3), P(y24, 3)}));
  add(21, M({P(y12, 2), P(y13, 2), P(y14, 2), P(y23, 2), P(y24, 2), P(y34, 2)}));
  add(-3, M({P(y12, 3), P(y13, 2), y14, y23, P(y24, 2), P(y34, 3)}));
  add(3, M({P(y12, 3), y13, P(y14, 2), P(y23, 2), y24, P(y34, 3)}));
  add(3, M({P(y12, 2), P(y13, 3), y14, y23, P(y24, 3), P(y34, 2)}));
  add(3, M({P(y12, 2), y13, P(y14, 3), P(y23, 3), y24, P(y34, 2)}));
  add(3, M({y12, P(y13, 3), P(y14, 2), P(y23, 2), P(y24, 3), y34}));
  add(-3, M({y12, P(y13, 2), P(y14, 3), P(y23, 3), P(y24, 2), y34}));
  return acc;
}

// ---------------- isotropic sampling ----------------

namespace {

std::vector<std::vector<u64>> kernel_basis(const std::vector<std::vector<u64>>& rows,
                                           int r, const PrimeField& f) {
  if (rows.empty()) {
    std::vector<std::vector<u64>> id((std::size_t)r, std::vector<u64>((std::size_t)r, 0));
    for (int i = 0; i < r; ++i) id[(std::size_t)i][(std::size_t)i] = 1;
    return id;
  }
  FpMatrix m(rows.size(), (std::size_t)r);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < r; ++j) m.at(i, (std::size_t)j) = rows[i][(std::size_t)j];
  return m.nullspace(f);
}

}  // namespace

FpMatrix isotropic_sample(int k, int r, const QuadForm& q, const PrimeField& f,
                          CounterRng& rng, int max_retries) {
  if (r < 2) throw std::invalid_argument("isotropic_sample: r must be >= 2");
  std::vector<std::vector<u64>> rows;
  FpMatrix qm = q.matrix(f);
  auto bil = [&](std::span<const u64> a, std::span<const u64> b) {
    return q.dot(a, b, f);
  };
  for (int t = 0; t < k; ++t) {
    // linear constraints: Q-orthogonality to all previous rows
    std::vector<std::vector<u64>> cons;
    for (const auto& prev : rows) {
      std::vector<u64> c((std::size_t)r, 0);
      for (int j = 0; j < r; ++j) {
        u64 acc = 0;
        for (int i = 0; i < r; ++i)
          acc = f.add(acc, f.mul(prev[(std::size_t)i], qm.at((std::size_t)i, (std::size_t)j)));
        c[(std::size_t)j] = acc;
      }
      cons.push_back(std::move(c));
    }
    auto basis = kernel_basis(cons, r, f);
    bool placed = false;
    for (int attempt = 0; attempt < max_retries && !placed; ++attempt) {
      if (basis.size() < 1) break;
      std::vector<u64> v0((std::size_t)r, 0);
      for (std::size_t b = 0; b + 1 < basis.size(); ++b) {
        const u64 c = f.random(rng);
        for (int j = 0; j < r; ++j)
          v0[(std::size_t)j] = f.add(v0[(std::size_t)j], f.mul(c, basis[b][(std::size_t)j]));
      }
      const auto& bl = basis.back();
      // q(v0 + t bl) = q0 + 2 t B(v0,bl) + t^2 q(bl)
      const u64 q0 = bil(v0, v0);
      const u64 q1 = f.mul(2, bil(v0, bl));
      const u64 q2 = bil(bl, bl);
      std::optional<u64> sol;
      if (q2 == 0) {
        if (q1 != 0) sol = f.mul(f.neg(q0), f.inv(q1));
        else if (q0 == 0) sol = f.random(rng);
      } else {
        const u64 disc = f.sub(f.mul(q1, q1), f.mul(4, f.mul(q2, q0)));
        auto sq = f.sqrt(disc);
        if (sq) sol = f.mul(f.add(f.neg(q1), *sq), f.inv(f.mul(2, q2)));
      }
      if (!sol) continue;
      std::vector<u64> v = v0;
      for (int j = 0; j < r; ++j)
        v[(std::size_t)j] = f.add(v[(std::size_t)j], f.mul(*sol, bl[(std::size_t)j]));
      bool zero = true;
      for (u64 x : v) zero &= x == 0;
      if (zero) continue;
      rows.push_back(std::move(v));
      placed = true;
    }
    if (!placed)
      throw std::runtime_error(
          "isotropic_sample: no isotropic row found after " +
          std::to_string(max_retries) + " retries (row " + std::to_string(t) + ")");
  }
  FpMatrix y((std::size_t)k, (std::size_t)r);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < r; ++j) y.at((std::size_t)i, (std::size_t)j) = rows[(std::size_t)i][(std::size_t)j];
  return y;
}

int component_sign(const FpMatrix& y, const PrimeField& f) {
  const int k = (int)y.rows();
  const int r = (int)y.cols();
  if (r != 2 * k) throw std::invalid_argument("component_sign: need a k x 2k matrix");
  int eps = 0;
  std::vector<int> cols((std::size_t)k);
  for (int i = 0; i < k; ++i) cols[(std::size_t)i] = i;
  for (;;) {
    std::vector<int> comp;
    {
      std::size_t t = 0;
      for (int c = 0; c < r; ++c) {
        if (t < cols.size() && cols[t] == c) { ++t; continue; }
        comp.push_back(c);
      }
    }
    auto sub_det = [&](const std::vector<int>& cs) {
      FpMatrix s((std::size_t)k, (std::size_t)k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          s.at((std::size_t)i, (std::size_t)j) = y.at((std::size_t)i, (std::size_t)cs[(std::size_t)j]);
      return s.det(f);
    };
    const u64 da = sub_det(cols);
    const u64 dc = sub_det(comp);
    if (da != 0 || dc != 0) {
      int e;
      if (da == dc) e = 1;
      else if (da == f.neg(dc)) e = -1;
      else
        throw std::runtime_error("component_sign: not on either component");
      if (eps == 0) eps = e;
      else if (eps != e && da != 0)
        throw std::runtime_error("component_sign: inconsistent signs across subsets");
    }
    // next k-combination of [0, 2k)
    int i = k - 1;
    while (i >= 0 && cols[(std::size_t)i] == r - k + i) --i;
    if (i < 0) break;
    ++cols[(std::size_t)i];
    for (int j = i + 1; j < k; ++j) cols[(std::size_t)j] = cols[(std::size_t)(j - 1)] + 1;
  }
  if (eps == 0) throw std::runtime_error("component_sign: matrix has rank < k");
  return eps;
}

FpMatrix sample_component(int k, int sign, const PrimeField& f, CounterRng& rng) {
  const QuadForm q = QuadForm::alternating(2 * k);
  for (int attempt = 0; attempt < 64; ++attempt) {
    FpMatrix y = isotropic_sample(k, 2 * k, q, f, rng);
    if (y.rank(f) != (std::size_t)k) continue;
    int s = component_sign(y, f);
    if (s != sign) {
      // negating one coordinate reflects onto the other component
      for (int i = 0; i < k; ++i)
        y.at((std::size_t)i, (std::size_t)(2 * k - 1)) =
            f.neg(y.at((std::size_t)i, (std::size_t)(2 * k - 1)));
      s = component_sign(y, f);
    }
    if (s == sign) return y;
  }
  throw std::runtime_error("sample_component: failed to hit requested component");
}

u64 pairing_det(const FpMatrix& x, const FpMatrix& y, const QuadForm& q,
                const PrimeField& f) {
  const int k = (int)x.rows();
  FpMatrix m((std::size_t)k, (std::size_t)k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m.at((std::size_t)i, (std::size_t)j) =
          q.dot(std::span<const u64>(x.row((std::size_t)i), x.cols()),
                std::span<const u64>(y.row((std::size_t)j), y.cols()), f);
  return m.det(f);
}

bool parity_expect_singular(int k, bool same_component) {
  return (k % 2 == 1) == same_component;
}

bool parity_check(const FpMatrix& x, const FpMatrix& y, bool same_component,
                  const PrimeField& f) {
  const int k = (int)x.rows();
  const QuadForm q = QuadForm::alternating(2 * k);
  const bool singular = pairing_det(x, y, q, f) == 0;
  return singular == parity_expect_singular(k, same_component);
}

// ---------------- lifts and low-rank parametrizations ----------------

FpMatrix lowrank_lift(const FpMatrix& x_small, int ell, int k,
                      const std::vector<FpMatrix>& a, const PrimeField& f) {
  const int n = (int)a.size();
  if (x_small.rows() != (std::size_t)(ell * n) || x_small.cols() != x_small.rows())
    throw std::invalid_argument("lowrank_lift: block-size mismatch");
  for (const auto& ai : a)
    if (ai.rows() != (std::size_t)(k - ell) || ai.cols() != (std::size_t)ell)
      throw std::invalid_argument("lowrank_lift: A_i must be (k-ell) x ell");
  FpMatrix out((std::size_t)(k * n), (std::size_t)(k * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // top-left X_ij, then products with A_i, A_j
      for (int p = 0; p < ell; ++p)
        for (int s = 0; s < ell; ++s)
          out.at((std::size_t)(k * i + p), (std::size_t)(k * j + s)) =
              x_small.at((std::size_t)(ell * i + p), (std::size_t)(ell * j + s));
      for (int p = 0; p < ell; ++p)
        for (int s = 0; s < k - ell; ++s) {
          u64 acc = 0;
          for (int q = 0; q < ell; ++q)
            acc = f.add(acc, f.mul(x_small.at((std::size_t)(ell * i + p),
                                              (std::size_t)(ell * j + q)),
                                   a[(std::size_t)j].at((std::size_t)s, (std::size_t)q)));
          out.at((std::size_t)(k * i + p), (std::size_t)(k * j + ell + s)) = acc;
        }
      for (int p = 0; p < k - ell; ++p)
        for (int s = 0; s < ell; ++s) {
          u64 acc = 0;
          for (int q = 0; q < ell; ++q)
            acc = f.add(acc, f.mul(a[(std::size_t)i].at((std::size_t)p, (std::size_t)q),
                                   x_small.at((std::size_t)(ell * i + q),
                                              (std::size_t)(ell * j + s))));
          out.at((std::size_t)(k * i + ell + p), (std::size_t)(k * j + s)) = acc;
        }
      for (int p = 0; p < k - ell; ++p)
        for (int s = 0; s < k - ell; ++s) {
          u64 acc = 0;
          for (int q = 0; q < ell; ++q)
            for (int q2 = 0; q2 < ell; ++q2)
              acc = f.add(
                  acc, f.mul(f.mul(a[(std::size_t)i].at((std::size_t)p, (std::size_t)q),
                                   x_small.at((std::size_t)(ell * i + q),
                                              (std::size_t)(ell * j + q2))),
                             a[(std::size_t)j].at((std::size_t)s, (std::size_t)q2)));
          out.at((std::size_t)(k * i + ell + p), (std::size_t)(k * j + ell + s)) = acc;
        }
    }
  return out;
}

FpMatrix hadamard_r3(int k, int n, const std::vector<std::vector<u64>>& a,
                     std::span<const u64> s, std::span<const u64> t,
                     const PrimeField& f) {
  if ((int)a.size() != n || (int)s.size() != n || (int)t.size() != n)
    throw std::invalid_argument("hadamard_r3: need n vectors and n scalars");
  FpMatrix x((std::size_t)(k * n), (std::size_t)(k * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const u64 c = f.sub(f.mul(s[(std::size_t)i], t[(std::size_t)j]),
                          f.mul(s[(std::size_t)j], t[(std::size_t)i]));
      const u64 c2 = f.mul(c, c);
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
          x.at((std::size_t)(k * i + p), (std::size_t)(k * j + q)) =
              f.mul(c2, f.mul(a[(std::size_t)i][(std::size_t)p],
                              a[(std::size_t)j][(std::size_t)q]));
    }
  return x;
}

FpMatrix segre_r2(int k, int n, const std::vector<bool>& in_I,
                  const std::vector<std::vector<u64>>& a, const PrimeField& f) {
  if ((int)in_I.size() != n || (int)a.size() != n)
    throw std::invalid_argument("segre_r2: need n flags and n vectors");
  int cnt = 0;
  for (bool b : in_I) cnt += b;
  if (cnt == 0 || cnt == n)
    throw std::invalid_argument("segre_r2: I must be a nonempty proper subset");
  FpMatrix x((std::size_t)(k * n), (std::size_t)(k * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (in_I[(std::size_t)i] == in_I[(std::size_t)j]) continue;
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
          x.at((std::size_t)(k * i + p), (std::size_t)(k * j + q)) =
              f.mul(a[(std::size_t)i][(std::size_t)p], a[(std::size_t)j][(std::size_t)q]);
    }
  return x;
}

FpMatrix ypm_gram(const SpinorConfig& cfg, const std::vector<bool>& in_I,
                  const PrimeField& f) {
  if ((int)in_I.size() != cfg.n)
    throw std::invalid_argument("ypm_gram: partition flag per field required");
  // plus blocks for I, minus blocks for the complement
  std::vector<bool> plus = in_I;
  bool any = false;
  for (bool b : plus) any |= b;
  if (!any) {
    // all-minus equals the all-plus product exactly
    plus.assign((std::size_t)cfg.n, true);
  }
  return stacked_gram(cfg, plus, f);
}

// ---------------- symbolic builders ----------------

algebra::PolyRing::Ptr nullcone_ring(int n) {
  std::vector<std::string> names;
  const char* letters = "abcdefg";
  for (int i = 1; i <= n; ++i)
    for (int t = 0; t < 7; ++t)
      names.push_back(std::string(1, letters[t]) + std::to_string(i));
  return algebra::PolyRing::make(std::move(names));
}

std::vector<PWPolys> nullcone_polys(int n) {
  auto ring = nullcone_ring(n);
  std::vector<PWPolys> out;
  for (int i = 0; i < n; ++i) {
    auto V = [&](int t) { return Poly::variable(ring, (std::size_t)(7 * i + t)); };
    const Poly a = V(0), b = V(1), c = V(2), d = V(3), e = V(4), f = V(5), g = V(6);
    PWPolys pw;
    pw.p[0] = a * b * d + a * c * e - b * e + c * d;
    pw.p[1] = -(a * b * d) - a * c * e + b * e + c * d;
    pw.p[2] = (c * e).scale(-2);
    pw.p[3] = b * c * d + c * c * e - a * d + e;
    pw.p[4] = -(b * c * d) - c * c * e - a * d + e;
    pw.w[0] = a * b * f + a * c * g - b * g + c * f;
    pw.w[1] = -(a * b * f) - a * c * g + b * g + c * f;
    pw.w[2] = (c * g).scale(-2);
    pw.w[3] = b * c * f + c * c * g - a * f + g;
    pw.w[4] = -(b * c * f) - c * c * g - a * f + g;
    out.push_back(std::move(pw));
  }
  return out;
}

algebra::PolyRing::Ptr spinor_ring(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back("u" + std::to_string(i) + "1");
    names.push_back("u" + std::to_string(i) + "2");
    names.push_back("ub" + std::to_string(i) + "1");
    names.push_back("ub" + std::to_string(i) + "2");
    names.push_back("v" + std::to_string(i) + "1");
    names.push_back("v" + std::to_string(i) + "2");
  }
  return algebra::PolyRing::make(std::move(names));
}

std::vector<SpinorPolys> spinor_polys(int n) {
  auto ring = spinor_ring(n);
  std::vector<SpinorPolys> out;
  for (int i = 0; i < n; ++i) {
    auto V = [&](int t) { return Poly::variable(ring, (std::size_t)(6 * i + t)); };
    SpinorPolys s;
    s.u = {V(0), V(1)};
    s.ub = {V(2), V(3)};
    s.v = {V(4), V(5)};
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace isogram::paramzoo
