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

#include "dimscan/dimscan.hpp"

#include <stdexcept>

#include "algebra/fp_matrix.hpp"

namespace isogram::dimscan {

using algebra::FpMatrix;

std::optional<int> jacobian_rank_at(const ParamMap& map, const PrimeField& f,
                                    std::span<const u64> point) {
  if ((int)point.size() != map.parameter_count)
    throw std::invalid_argument("jacobian_rank_at: wrong parameter count");
  const int rows = map.coordinate_count();
  const int cols = map.parameter_count;
  FpMatrix j((std::size_t)rows, (std::size_t)cols);
  for (int i = 0; i < rows; ++i) {
    const auto& c = map.coords[(std::size_t)i];
    u64 den_v = 1, num_v = 0;
    if (c.den) {
      den_v = c.den->eval_mod(f, point);
      if (den_v == 0) return std::nullopt;
      num_v = c.num.eval_mod(f, point);
    }
    for (int t = 0; t < cols; ++t) {
      // d/dt (num/den^k): row scaled by den^(k+1), leaving num' den - k num den'
      u64 v = 0;
      if (c.num.involves((std::size_t)t))
        v = c.num.partial_derivative((std::size_t)t).eval_mod(f, point);
      if (c.den) {
        u64 dpart = 0;
        if (c.den->involves((std::size_t)t))
          dpart = c.den->partial_derivative((std::size_t)t).eval_mod(f, point);
        v = f.sub(f.mul(v, den_v),
                  f.mul(f.mul(f.from_int(c.den_pow), num_v), dpart));
      }
      j.at((std::size_t)i, (std::size_t)t) = v;
    }
  }
  return (int)j.rank(f);
}

DimReport image_dimension(const ParamMap& map, const PrimeField& f, int trials,
                          u64 seed) {
  if (trials < 8) throw std::invalid_argument("image_dimension: trials must be >= 8");
  DimReport rep;
  rep.trials = trials;
  rep.prime = f.modulus();
  CounterRng rng(seed, algebra::streams::kDimTrials ^ f.modulus());

  const int nc = map.coordinate_count();
  const int np = map.parameter_count;
  // accept points where every denominator is nonzero; cache num/den values
  std::vector<std::vector<u64>> pts;
  std::vector<std::vector<u64>> den_v((std::size_t)nc), num_v((std::size_t)nc);
  int rejected = 0;
  while ((int)pts.size() < trials) {
    std::vector<u64> point((std::size_t)np);
    for (auto& v : point) v = f.random(rng);
    bool ok = true;
    std::vector<u64> dv((std::size_t)nc, 1), nv((std::size_t)nc, 0);
    for (int i = 0; i < nc && ok; ++i) {
      const auto& c = map.coords[(std::size_t)i];
      if (!c.den) continue;
      dv[(std::size_t)i] = c.den->eval_mod(f, point);
      ok = dv[(std::size_t)i] != 0;
      if (ok) nv[(std::size_t)i] = c.num.eval_mod(f, point);
    }
    if (!ok) {
      if (++rejected > 64 * trials)
        throw std::runtime_error("image_dimension: all trials rejected");
      continue;
    }
    for (int i = 0; i < nc; ++i) {
      den_v[(std::size_t)i].push_back(dv[(std::size_t)i]);
      num_v[(std::size_t)i].push_back(nv[(std::size_t)i]);
    }
    pts.push_back(std::move(point));
  }

  // each partial derivative is formed once and evaluated at every point
  std::vector<FpMatrix> jac((std::size_t)trials,
                            FpMatrix((std::size_t)nc, (std::size_t)np));
  for (int i = 0; i < nc; ++i) {
    const auto& c = map.coords[(std::size_t)i];
    for (int t = 0; t < np; ++t) {
      const bool num_dep = c.num.involves((std::size_t)t);
      const bool den_dep = c.den && c.den->involves((std::size_t)t);
      if (!num_dep && !den_dep) continue;
      Poly dnum = num_dep ? c.num.partial_derivative((std::size_t)t)
                          : Poly::zero(c.num.ring());
      Poly dden = den_dep ? c.den->partial_derivative((std::size_t)t)
                          : Poly::zero(c.num.ring());
      for (int s = 0; s < trials; ++s) {
        u64 v = num_dep ? dnum.eval_mod(f, pts[(std::size_t)s]) : 0;
        if (c.den) {
          const u64 dd = den_dep ? dden.eval_mod(f, pts[(std::size_t)s]) : 0;
          v = f.sub(f.mul(v, den_v[(std::size_t)i][(std::size_t)s]),
                    f.mul(f.mul(f.from_int(c.den_pow), num_v[(std::size_t)i][(std::size_t)s]),
                          dd));
        }
        jac[(std::size_t)s].at((std::size_t)i, (std::size_t)t) = v;
      }
    }
  }

  std::vector<int> ranks;
  for (int s = 0; s < trials; ++s) ranks.push_back((int)jac[(std::size_t)s].rank(f));
  int best = 0;
  for (int r : ranks) best = std::max(best, r);
  rep.observed_rank = best;
  rep.stabilized = true;
  for (std::size_t i = ranks.size() / 2; i < ranks.size(); ++i)
    rep.stabilized &= ranks[i] == best;
  rep.reported_dimension = map.cone ? best - 1 : best;
  return rep;
}

// ---------------- builders ----------------

namespace {

using paramzoo::PWPolys;
using paramzoo::SpinorPolys;

Poly sig5_dot(std::span<const Poly> a, std::span<const Poly> b) {
  return paramzoo::QuadForm::signature5().dot(a, b);
}

struct NullconeSym {
  std::vector<PWPolys> f;
  int n;
  // interleaved rows P1, W1, ..., Pn, Wn
  std::span<const Poly> row(int i) const {
    return i % 2 ? std::span<const Poly>(f[(std::size_t)(i / 2)].w)
                 : std::span<const Poly>(f[(std::size_t)(i / 2)].p);
  }
};

Poly bra(const std::array<Poly, 2>& x, const std::array<Poly, 2>& y) {
  return x[0] * y[1] - x[1] * y[0];
}

}  // namespace

ParamMap nullcone_gram_map(int n) {
  NullconeSym s{paramzoo::nullcone_polys(n), n};
  ParamMap m;
  m.parameter_count = 7 * n;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      if (i / 2 == j / 2) continue;
      m.coords.push_back({sig5_dot(s.row(i), s.row(j)), std::nullopt, 1});
    }
  return m;
}

ParamMap spinor_gram_map(int n) {
  auto sp = paramzoo::spinor_polys(n);
  ParamMap m;
  m.parameter_count = 6 * n;
  // free entries of the stacked hyperbolic product: x_{2i-1,2j-1} etc.
  auto entry = [&](int a, int b) {
    // rows a, b of the 2n x 4 stacked matrix, hyperbolic pairing
    const auto& fa = sp[(std::size_t)(a / 2)];
    const auto& fb = sp[(std::size_t)(b / 2)];
    const auto& sa = a % 2 ? fa.ub : fa.u;
    const auto& sb = b % 2 ? fb.ub : fb.u;
    // [a b] < a b > expansion of the Q-pairing of plus-type rows
    return bra(sa, sb) * bra(fa.v, fb.v);
  };
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      if (i / 2 == j / 2) continue;
      m.coords.push_back({entry(i, j), std::nullopt, 1});
    }
  return m;
}

ParamMap hadamard_gram_map(int k, int n) {
  // parameters: a_i in F^k (kn), then s_i (n), then t_i (n)
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= k; ++p)
      names.push_back("a" + std::to_string(i) + "_" + std::to_string(p));
  for (int i = 1; i <= n; ++i) names.push_back("s" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("t" + std::to_string(i));
  auto ring = algebra::PolyRing::make(std::move(names));
  auto A = [&](int i, int p) {
    return Poly::variable(ring, (std::size_t)(k * i + p));
  };
  auto S = [&](int i) { return Poly::variable(ring, (std::size_t)(k * n + i)); };
  auto T = [&](int i) { return Poly::variable(ring, (std::size_t)(k * n + n + i)); };
  ParamMap m;
  m.parameter_count = k * n + 2 * n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly c = S(i) * T(j) - S(j) * T(i);
      Poly c2 = c * c;
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
          m.coords.push_back({c2 * A(i, p) * A(j, q), std::nullopt, 1});
    }
  return m;
}

ParamMap segre_gram_map(int k, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= k; ++p)
      names.push_back("a" + std::to_string(i) + "_" + std::to_string(p));
  auto ring = algebra::PolyRing::make(std::move(names));
  auto A = [&](int i, int p) {
    return Poly::variable(ring, (std::size_t)(k * i + p));
  };
  ParamMap m;
  m.parameter_count = k * n;
  // I = {1}: blocks (1, j) carry the outer product, others vanish
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool cross = (i == 0) != (j == 0);
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
          Poly c = cross ? A(i, p) * A(j, q) : Poly::zero(ring);
          m.coords.push_back({std::move(c), std::nullopt, 1});
        }
    }
  return m;
}

ParamMap phv_map(int n, int r) {
  ParamMap m;
  if (r == 5) {
    NullconeSym s{paramzoo::nullcone_polys(n), n};
    m.parameter_count = 7 * n;
    auto P = [&](int i) { return s.row(2 * i); };
    auto W = [&](int i) { return s.row(2 * i + 1); };
    std::vector<Poly> pij((std::size_t)(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly p = sig5_dot(P(i), P(j));
        pij[(std::size_t)(i * n + j)] = p;
        m.coords.push_back({std::move(p), std::nullopt, 1});
      }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly h = sig5_dot(W(i), W(j)) * pij[(std::size_t)(i * n + j)] -
                 sig5_dot(W(i), P(j)) * sig5_dot(W(j), P(i));
        m.coords.push_back({std::move(h), std::nullopt, 1});
      }
    auto pd = [&](int i, int j) {
      return pij[(std::size_t)(std::min(i, j) * n + std::max(i, j))];
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          if (j == i || k == i) continue;
          Poly num = sig5_dot(W(i), P(j)) * sig5_dot(P(k), P(i)) -
                     sig5_dot(W(i), P(k)) * sig5_dot(P(j), P(i));
          m.coords.push_back({std::move(num), pd(j, k), 1});
        }
    return m;
  }
  if (r == 4) {
    auto sp = paramzoo::spinor_polys(n);
    m.parameter_count = 6 * n;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        m.coords.push_back(
            {bra(sp[(std::size_t)i].u, sp[(std::size_t)j].u) *
                 bra(sp[(std::size_t)i].v, sp[(std::size_t)j].v),
             std::nullopt, 1});
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly vv = bra(sp[(std::size_t)i].v, sp[(std::size_t)j].v);
        m.coords.push_back({vv * vv * bra(sp[(std::size_t)i].u, sp[(std::size_t)i].ub) *
                                bra(sp[(std::size_t)j].u, sp[(std::size_t)j].ub),
                            std::nullopt, 1});
      }
    for (int s = 0; s < n; ++s)
      for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          if (j == s || k == s) continue;
          Poly num = bra(sp[(std::size_t)s].v, sp[(std::size_t)j].v) *
                     bra(sp[(std::size_t)s].v, sp[(std::size_t)k].v) *
                     bra(sp[(std::size_t)s].u, sp[(std::size_t)s].ub);
          m.coords.push_back(
              {std::move(num), bra(sp[(std::size_t)j].v, sp[(std::size_t)k].v), 1});
        }
    return m;
  }
  throw std::invalid_argument("phv_map: r must be 4 or 5");
}

ParamMap twopoint_map(int n, int r) {
  ParamMap m;
  m.cone = true;
  if (r == 5) {
    NullconeSym s{paramzoo::nullcone_polys(n), n};
    m.parameter_count = 7 * n;
    auto P = [&](int i) { return s.row(2 * i); };
    auto W = [&](int i) { return s.row(2 * i + 1); };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Poly p = sig5_dot(P(i), P(j));
        Poly h = sig5_dot(W(i), W(j)) * p - sig5_dot(W(i), P(j)) * sig5_dot(W(j), P(i));
        m.coords.push_back({std::move(h), std::move(p), 3});
      }
    return m;
  }
  if (r == 4) {
    auto sp = paramzoo::spinor_polys(n);
    m.parameter_count = 6 * n;
    for (int s = 0; s < n; ++s)
      for (int t = s + 1; t < n; ++t) {
        Poly num = bra(sp[(std::size_t)s].u, sp[(std::size_t)s].ub) *
                   bra(sp[(std::size_t)t].u, sp[(std::size_t)t].ub);
        // z = num / ([s t]^3 <s t>): keep the full denominator expanded once
        Poly ust = bra(sp[(std::size_t)s].u, sp[(std::size_t)t].u);
        Poly den = ust * ust * ust * bra(sp[(std::size_t)s].v, sp[(std::size_t)t].v);
        m.coords.push_back({std::move(num), std::move(den), 1});
      }
    return m;
  }
  throw std::invalid_argument("twopoint_map: r must be 4 or 5");
}

std::vector<ConjectureRow> conjecture_scan(int n_min, int n_max, const PrimeField& f,
                                           int trials, u64 seed) {
  if (n_min < 3) throw std::invalid_argument("conjecture_scan: n must be >= 3");
  std::vector<ConjectureRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const DimReport rep = image_dimension(twopoint_map(n, 5), f, trials, seed);
    ConjectureRow row;
    row.n = n;
    row.observed = rep.reported_dimension;
    row.predicted = std::min(5 * n - 11, n * (n - 1) / 2 - 1);
    row.match = row.observed == row.predicted;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace isogram::dimscan
