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

#include <array>

#include "doctest.h"
#include "gramvar/gramvar.hpp"
#include "paramzoo/paramzoo.hpp"

using namespace isogram;
using namespace isogram::paramzoo;
using algebra::CounterRng;
using algebra::Poly;
using algebra::PrimeField;
using algebra::u64;

namespace {
const PrimeField F(algebra::kDefaultPrime);
}

TEST_CASE("null-cone coordinates at simple parameters") {
  NullConeConfig cfg;
  cfg.n = 1;
  cfg.params = {1, 1, 1, 1, 1, 1, 1};
  const auto pw = nullcone_point(cfg, F);
  const std::vector<u64> expect{2, 0, F.neg(2), 2, F.neg(2)};
  CHECK(pw.P[0] == expect);
  CHECK(pw.form.dot(pw.P[0], pw.P[0], F) == 0);

  cfg.params = {0, 0, 0, 0, 0, 0, 0};
  const auto zero = nullcone_point(cfg, F);
  CHECK(zero.P[0] == std::vector<u64>(5, 0));
  CHECK(zero.W[0] == std::vector<u64>(5, 0));
}

TEST_CASE("null-cone isotropy holds symbolically") {
  const auto polys = nullcone_polys(1);
  const auto form = QuadForm::signature5();
  CHECK(form.dot(polys[0].p, polys[0].p).is_zero());
  CHECK(form.dot(polys[0].p, polys[0].w).is_zero());
  CHECK(form.dot(polys[0].w, polys[0].w).is_zero());
}

TEST_CASE("gram matrices from the null cone") {
  CounterRng rng(1, 10);
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + (int)rng.below(2);
    const auto cfg = NullConeConfig::random(n, F, rng);
    const auto x = gram_from_pw(nullcone_point(cfg, F), F);
    CHECK(x.rank(F) <= 5);
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) {
        CHECK(x.at((std::size_t)i, (std::size_t)j) ==
              x.at((std::size_t)j, (std::size_t)i));
        if (i / 2 == j / 2) CHECK(x.at((std::size_t)i, (std::size_t)j) == 0);
      }
  }
}

TEST_CASE("determinant identity for three fields at samples") {
  CounterRng rng(2, 11);
  int done = 0;
  while (done < 30) {
    const auto cfg = NullConeConfig::random(3, F, rng);
    const auto x = gram_from_pw(nullcone_point(cfg, F), F);
    const auto inv = invariants_from_gram(x, 3, F);
    if (!inv) continue;
    ++done;
    const u64 det = x.det(F);
    const u64 h12 = inv->H(1, 2), h13 = inv->H(1, 3), h23 = inv->H(2, 3);
    const u64 v1 = inv->V(1, 2, 3, F), v2 = inv->V(2, 1, 3, F), v3 = inv->V(3, 1, 2, F);
    u64 bracket = F.sub(F.mul(v1, h23), F.mul(v2, h13));
    bracket = F.add(bracket, F.mul(v3, h12));
    bracket = F.add(bracket, F.mul(F.mul(v1, v2), v3));
    const u64 rhs = F.sub(F.mul(4, F.mul(h12, F.mul(h23, h13))), F.mul(bracket, bracket));
    CHECK(det == rhs);
  }
}

TEST_CASE("invariants agree with the vector formulas") {
  CounterRng rng(3, 12);
  const auto form = QuadForm::signature5();
  int done = 0;
  while (done < 100) {
    const int n = 3 + (int)rng.below(2);
    const auto cfg = NullConeConfig::random(n, F, rng);
    const auto pw = nullcone_point(cfg, F);
    const auto x = gram_from_pw(pw, F);
    const auto inv = invariants_from_gram(x, n, F);
    if (!inv) continue;
    ++done;
    auto dot = [&](const std::vector<u64>& a, const std::vector<u64>& b) {
      return form.dot(a, b, F);
    };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const auto &Pi = pw.P[(std::size_t)(i - 1)], &Pj = pw.P[(std::size_t)(j - 1)];
        const auto &Wi = pw.W[(std::size_t)(i - 1)], &Wj = pw.W[(std::size_t)(j - 1)];
        CHECK(inv->P(i, j) == dot(Pi, Pj));
        CHECK(inv->H(i, j) == F.sub(F.mul(dot(Wi, Wj), dot(Pi, Pj)),
                                    F.mul(dot(Wi, Pj), dot(Wj, Pi))));
      }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          if (j == i || k == i) continue;
          const auto &Pi = pw.P[(std::size_t)(i - 1)], &Pj = pw.P[(std::size_t)(j - 1)],
                     &Pk = pw.P[(std::size_t)(k - 1)];
          const auto& Wi = pw.W[(std::size_t)(i - 1)];
          const u64 num = F.sub(F.mul(dot(Wi, Pj), dot(Pk, Pi)),
                                F.mul(dot(Wi, Pk), dot(Pj, Pi)));
          CHECK(inv->V(i, j, k, F) == F.mul(num, F.inv(dot(Pj, Pk))));
        }
  }
}

TEST_CASE("invariants are translation invariant") {
  CounterRng rng(4, 13);
  int done = 0;
  while (done < 10) {
    const int n = 4;
    const auto cfg = NullConeConfig::random(n, F, rng);
    auto pw = nullcone_point(cfg, F);
    const auto inv = invariants_from_gram(gram_from_pw(pw, F), n, F);
    if (!inv) continue;
    ++done;
    for (int trial = 0; trial < 20; ++trial) {
      auto shifted = pw;
      for (int i = 0; i < n; ++i) {
        const u64 alpha = F.random(rng);
        for (int c = 0; c < 5; ++c)
          shifted.W[(std::size_t)i][(std::size_t)c] =
              F.add(shifted.W[(std::size_t)i][(std::size_t)c],
                    F.mul(alpha, shifted.P[(std::size_t)i][(std::size_t)c]));
      }
      const auto inv2 = invariants_from_gram(gram_from_pw(shifted, F), n, F);
      REQUIRE(inv2.has_value());
      CHECK(inv->values == inv2->values);
    }
  }
}

TEST_CASE("vanishing denominators are reported") {
  // a Gram matrix with x_{13} = 0 has undefined V coordinates
  CounterRng rng(21, 30);
  paramzoo::FpMatrix x(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      if (i / 2 == j / 2) continue;
      const u64 v = F.random(rng);
      x.at((std::size_t)i, (std::size_t)j) = v;
      x.at((std::size_t)j, (std::size_t)i) = v;
    }
  x.at(0, 2) = 0;
  x.at(2, 0) = 0;
  CHECK_FALSE(invariants_from_gram(x, 3, F).has_value());
}

TEST_CASE("H is the determinant of the mixed block") {
  CounterRng rng(5, 14);
  int done = 0;
  while (done < 20) {
    const auto cfg = NullConeConfig::random(3, F, rng);
    const auto x = gram_from_pw(nullcone_point(cfg, F), F);
    const auto inv = invariants_from_gram(x, 3, F);
    if (!inv) continue;
    ++done;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        const u64 a = x.at((std::size_t)(2 * i - 2), (std::size_t)(2 * j - 2));
        const u64 b = x.at((std::size_t)(2 * i - 2), (std::size_t)(2 * j - 1));
        const u64 c = x.at((std::size_t)(2 * i - 1), (std::size_t)(2 * j - 2));
        const u64 d = x.at((std::size_t)(2 * i - 1), (std::size_t)(2 * j - 1));
        CHECK(inv->H(i, j) == F.sub(F.mul(a, d), F.mul(b, c)));
      }
  }
}

namespace {

// symbolic Gram entries of the rank-4 stacked product for n fields
std::vector<std::vector<Poly>> symbolic_spinor_gram(int n) {
  const auto sp = spinor_polys(n);
  auto ring = sp[0].u[0].ring();
  std::vector<std::array<Poly, 4>> rows;
  for (int i = 0; i < n; ++i) {
    auto mk = [&](const std::array<Poly, 2>& s) -> std::array<Poly, 4> {
      const auto& v = sp[(std::size_t)i].v;
      return {s[0] * v[0], s[0] * v[1], s[1] * v[1], -(s[1] * v[0])};
    };
    rows.push_back(mk(sp[(std::size_t)i].u));
    rows.push_back(mk(sp[(std::size_t)i].ub));
  }
  const int m = 2 * n;
  std::vector<std::vector<Poly>> x((std::size_t)m,
                                   std::vector<Poly>((std::size_t)m, Poly::zero(ring)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto &a = rows[(std::size_t)i], &b = rows[(std::size_t)j];
      x[(std::size_t)i][(std::size_t)j] =
          a[0] * b[2] + a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
    }
  return x;
}

}  // namespace

TEST_CASE("spinor product identity, symbolically") {
  // H_st * P_{kt}den * P_{ks}den + Vnum_{s,kt} * Vnum_{t,ks} = 0 for (s,t,k) = (1,2,3)
  const auto x = symbolic_spinor_gram(3);
  auto e = [&](int i, int j) { return x[(std::size_t)(i - 1)][(std::size_t)(j - 1)]; };
  const int s = 1, t = 2, k = 3;
  Poly h = e(2 * s - 1, 2 * t - 1) * e(2 * s, 2 * t) -
           e(2 * s, 2 * t - 1) * e(2 * t, 2 * s - 1);
  auto vnum = [&](int i, int j, int kk) {
    return e(2 * i, 2 * j - 1) * e(2 * kk - 1, 2 * i - 1) -
           e(2 * i, 2 * kk - 1) * e(2 * j - 1, 2 * i - 1);
  };
  // V_{s,kt} has denominator x_{2k-1,2t-1}; V_{t,ks} has x_{2k-1,2s-1}
  Poly lhs = h * e(2 * k - 1, 2 * t - 1) * e(2 * k - 1, 2 * s - 1) +
             vnum(s, k, t) * vnum(t, k, s);
  CHECK(lhs.is_zero());

  // the V product equals -<s t>^2 [s sbar][t tbar] after clearing denominators
  const auto sp = spinor_polys(3);
  auto bra = [](const std::array<Poly, 2>& a, const std::array<Poly, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
  };
  Poly vv_cleared = vnum(s, k, t) * vnum(t, k, s);
  Poly st = bra(sp[0].v, sp[1].v);
  Poly target = -(st * st * bra(sp[0].u, sp[0].ub) * bra(sp[1].u, sp[1].ub)) *
                e(2 * k - 1, 2 * t - 1) * e(2 * k - 1, 2 * s - 1);
  CHECK(vv_cleared == target);
}

TEST_CASE("spinor points satisfy the rank-4 relations") {
  CounterRng rng(6, 15);
  int done = 0;
  while (done < 100) {
    const int n = 4;
    const auto cfg = SpinorConfig::random(n, F, rng);
    const auto sp = spinor_point(cfg, F);
    if (!sp) continue;
    ++done;
    CHECK(sp->gram.rank(F) <= 4);
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t)
        for (int k = 1; k <= n; ++k) {
          if (k == s || k == t) continue;
          CHECK(F.add(sp->phv.H(s, t),
                      F.mul(sp->phv.V(s, k, t, F), sp->phv.V(t, k, s, F))) == 0);
        }
    // closed forms (global sign on V fixed by the invariant definitions)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        CHECK(sp->phv.P(i, j) ==
              F.mul(bracket_uu(cfg, i, j, F), bracket_vv(cfg, i, j, F)));
        const u64 vv = bracket_vv(cfg, i, j, F);
        CHECK(sp->phv.H(i, j) == F.mul(F.mul(vv, vv),
                                       F.mul(bracket_uub(cfg, i, i, F),
                                             bracket_uub(cfg, j, j, F))));
      }
    for (int s = 1; s <= n; ++s)
      for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          if (j == s || k == s) continue;
          const u64 num = F.mul(F.mul(bracket_vv(cfg, s, j, F), bracket_vv(cfg, s, k, F)),
                                bracket_uub(cfg, s, s, F));
          const u64 cf = F.mul(num, F.inv(bracket_vv(cfg, j, k, F)));
          CHECK(sp->phv.V(s, j, k, F) == F.neg(cf));
        }
  }
}

TEST_CASE("two-point coordinates") {
  CounterRng rng(7, 16);
  int done = 0;
  while (done < 50) {
    const auto cfg = SpinorConfig::random(4, F, rng);
    const auto sp = spinor_point(cfg, F);
    if (!sp) continue;
    const auto z = twopoint_coords(sp->phv, F);
    if (!z) continue;
    ++done;
    // closed form z_st = [s sbar][t tbar] / ([s t]^3 <s t>)
    std::size_t idx = 0;
    bool zero_bracket = false;
    for (int s = 1; s <= 4 && !zero_bracket; ++s)
      for (int t = s + 1; t <= 4; ++t) {
        const u64 uu = bracket_uu(cfg, s, t, F);
        const u64 vv = bracket_vv(cfg, s, t, F);
        if (uu == 0 || vv == 0) { zero_bracket = true; break; }
        const u64 den = F.mul(F.pow(uu, 3), vv);
        const u64 cf = F.mul(F.mul(bracket_uub(cfg, s, s, F), bracket_uub(cfg, t, t, F)),
                             F.inv(den));
        CHECK((*z)[idx] == cf);
        ++idx;
      }
    const auto rec = twopoint_reciprocal(sp->phv, F);
    if (rec)
      for (std::size_t i = 0; i < z->size(); ++i)
        CHECK(F.mul((*z)[i], (*rec)[i]) == 1);
  }
}

TEST_CASE("two-point coordinates scale like a cone") {
  CounterRng rng(8, 17);
  int done = 0;
  while (done < 20) {
    auto cfg = SpinorConfig::random(4, F, rng);
    const auto sp1 = spinor_point(cfg, F);
    if (!sp1) continue;
    const auto z1 = twopoint_coords(sp1->phv, F);
    if (!z1) continue;
    // scale every ub_i by lambda = 2: every z scales by lambda^2
    for (auto& ub : cfg.ub) {
      ub[0] = F.mul(ub[0], 2);
      ub[1] = F.mul(ub[1], 2);
    }
    const auto sp2 = spinor_point(cfg, F);
    REQUIRE(sp2.has_value());
    const auto z2 = twopoint_coords(sp2->phv, F);
    REQUIRE(z2.has_value());
    ++done;
    for (std::size_t i = 0; i < z1->size(); ++i)
      CHECK((*z2)[i] == F.mul(4, (*z1)[i]));
  }
}

TEST_CASE("degree-12 relation among the y coordinates") {
  CounterRng rng(9, 18);
  int done = 0;
  while (done < 100) {
    const auto cfg = SpinorConfig::random(4, F, rng);
    const auto y = cubed_grassmannian_point(cfg, F);
    if (!y) continue;
    ++done;
    CHECK(cubed_grassmannian_relation(*y, F) == 0);
    auto bent = *y;
    bent[0] = F.add(bent[0], 1);
    CHECK(cubed_grassmannian_relation(bent, F) != 0);
  }
  // two equal u vectors give a zero bracket and are rejected
  auto cfg = SpinorConfig::random(4, F, rng);
  cfg.u[1] = cfg.u[0];
  CHECK_FALSE(cubed_grassmannian_point(cfg, F).has_value());
}

TEST_CASE("isotropic samples") {
  CounterRng rng(10, 19);
  SUBCASE("diag(1,-1) and the k=1 template") {
    const auto q = QuadForm::diagonal({1, -1});
    for (int t = 0; t < 10; ++t) {
      const auto y = isotropic_sample(1, 2, q, F, rng);
      CHECK(q.dot(std::span<const u64>(y.row(0), 2), std::span<const u64>(y.row(0), 2),
                  F) == 0);
      // (t, t) or (t, -t)
      const u64 a = y.at(0, 0), b = y.at(0, 1);
      CHECK((a == b || a == F.neg(b)));
    }
  }
  SUBCASE("generic rank min(k, r/2)") {
    for (auto [k, r] : std::vector<std::pair<int, int>>{
             {2, 4}, {2, 5}, {3, 6}, {1, 2}, {4, 8}, {2, 6}, {3, 7}}) {
      const auto q = QuadForm::alternating(r);
      std::size_t best = 0;
      for (int t = 0; t < 100; ++t) {
        const auto y = isotropic_sample(k, r, q, F, rng);
        bool iso = true;
        for (int i = 0; i < k && iso; ++i)
          for (int j = 0; j < k && iso; ++j)
            iso = q.dot(std::span<const u64>(y.row((std::size_t)i), (std::size_t)r),
                        std::span<const u64>(y.row((std::size_t)j), (std::size_t)r),
                        F) == 0;
        CHECK(iso);
        best = std::max(best, y.rank(F));
      }
      CHECK(best == (std::size_t)std::min(k, r / 2));
    }
  }
  SUBCASE("plus/minus template blocks against the hyperbolic form") {
    const auto q = QuadForm::hyperbolic(4);
    int done = 0;
    while (done < 50) {
      const auto cfg = SpinorConfig::random(2, F, rng);
      const auto all_plus = ypm_gram(cfg, {true, true}, F);
      const auto mixed = ypm_gram(cfg, {true, false}, F);
      ++done;
      for (const auto& x : {all_plus, mixed}) {
        CHECK(x.rank(F) <= 4);
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            if (i / 2 == j / 2) CHECK(x.at((std::size_t)i, (std::size_t)j) == 0);
      }
      // mixed off-diagonal block is singular (even k, different components)
      paramzoo::FpMatrix blk(2, 2);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          blk.at((std::size_t)a, (std::size_t)b) =
              mixed.at((std::size_t)a, (std::size_t)(2 + b));
      CHECK(blk.det(F) == 0);
    }
  }
}

TEST_CASE("spinor gram equals the all-minus stacked product") {
  CounterRng rng(11, 20);
  for (int t = 0; t < 20; ++t) {
    const auto cfg = SpinorConfig::random(4, F, rng);
    const auto sp = spinor_point(cfg, F);
    if (!sp) continue;
    const auto x = ypm_gram(cfg, std::vector<bool>(4, false), F);
    CHECK(x == sp->gram);
  }
}

TEST_CASE("component signs") {
  CounterRng rng(12, 21);
  SUBCASE("k=1 templates get opposite signs") {
    paramzoo::FpMatrix a(1, 2), b(1, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 1;
    b.at(0, 0) = 1; b.at(0, 1) = F.neg(1);
    CHECK(component_sign(a, F) == 1);
    CHECK(component_sign(b, F) == -1);
  }
  SUBCASE("consistency and reflection flip for k = 2") {
    int flips = 0;
    for (int t = 0; t < 100; ++t) {
      const int want = rng.below(2) ? 1 : -1;
      auto y = sample_component(2, want, F, rng);
      CHECK(component_sign(y, F) == want);
      // swapping two coordinates of equal signature reflects the component
      for (int i = 0; i < 2; ++i) std::swap(y.at((std::size_t)i, 0), y.at((std::size_t)i, 2));
      flips += component_sign(y, F) == -want;
    }
    CHECK(flips == 100);
  }
  SUBCASE("rejects non-isotropic input") {
    paramzoo::FpMatrix junk(2, 4);
    CounterRng r2(13, 22);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) junk.at(i, j) = F.random(r2);
    CHECK_THROWS_AS((void)component_sign(junk, F), std::runtime_error);
  }
}

TEST_CASE("parity of the pairing determinant") {
  CounterRng rng(14, 23);
  for (int k = 1; k <= 3; ++k) {
    const auto q = QuadForm::alternating(2 * k);
    for (bool same : {true, false}) {
      int singular = 0, verdicts = 0;
      const int pairs = 50;
      for (int t = 0; t < pairs; ++t) {
        const int s1 = rng.below(2) ? 1 : -1;
        const int s2 = same ? s1 : -s1;
        const auto x = sample_component(k, s1, F, rng);
        const auto y = sample_component(k, s2, F, rng);
        singular += pairing_det(x, y, q, F) == 0;
        verdicts += parity_check(x, y, same, F);
      }
      if (parity_expect_singular(k, same)) CHECK(singular == pairs);
      else CHECK(pairs - singular >= 48);
      CHECK(verdicts >= 48);
    }
  }
  // k = 1 hand case: rows (1,1) and (1,-1) under diag(-1,1)
  paramzoo::FpMatrix a(1, 2), b(1, 2);
  a.at(0, 0) = 1; a.at(0, 1) = 1;
  b.at(0, 0) = 1; b.at(0, 1) = F.neg(1);
  CHECK(parity_check(a, a, true, F));   // same component: product vanishes
  CHECK(parity_check(a, b, false, F));  // different: nonzero
  CHECK(pairing_det(a, b, QuadForm::alternating(2), F) != 0);
}

TEST_CASE("block lift") {
  CounterRng rng(15, 24);
  SUBCASE("rank preserved") {
    for (int t = 0; t < 100; ++t) {
      const int ell = 1, k = 3, n = 3;
      paramzoo::FpMatrix xs((std::size_t)(ell * n), (std::size_t)(ell * n));
      for (int i = 0; i < ell * n; ++i)
        for (int j = i + 1; j < ell * n; ++j) {
          const u64 v = F.random(rng);
          xs.at((std::size_t)i, (std::size_t)j) = v;
          xs.at((std::size_t)j, (std::size_t)i) = v;
        }
      std::vector<paramzoo::FpMatrix> a;
      for (int i = 0; i < n; ++i)
        a.push_back(paramzoo::FpMatrix::random((std::size_t)(k - ell), (std::size_t)ell, F, rng));
      const auto big = lowrank_lift(xs, ell, k, a, F);
      CHECK(big.rank(F) == xs.rank(F));
      for (int i = 0; i < k * n; ++i)
        for (int j = 0; j < k * n; ++j) {
          CHECK(big.at((std::size_t)i, (std::size_t)j) == big.at((std::size_t)j, (std::size_t)i));
          if (i / k == j / k) CHECK(big.at((std::size_t)i, (std::size_t)j) == 0);
        }
    }
  }
  SUBCASE("k = ell is the identity map") {
    paramzoo::FpMatrix xs(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (i / 2 == j / 2) continue;
        const u64 v = F.random(rng);
        xs.at((std::size_t)i, (std::size_t)j) = v;
        xs.at((std::size_t)j, (std::size_t)i) = v;
      }
    std::vector<paramzoo::FpMatrix> a(2, paramzoo::FpMatrix(0, 2));
    CHECK(lowrank_lift(xs, 2, 2, a, F) == xs);
  }
  SUBCASE("dimension bookkeeping of the lift") {
    using gramvar::dim_formula;
    // lifting from block size ell = floor(r/2) adds n*ell*(k-ell)
    for (auto [k, n, r] : std::vector<std::array<int, 3>>{
             {3, 3, 3}, {2, 4, 2}, {3, 4, 2}, {4, 3, 4}}) {
      const int ell = r / 2;
      CHECK(dim_formula({k, n, r}) ==
            dim_formula({ell, n, r}) + (long long)n * ell * (k - ell));
    }
  }
}

TEST_CASE("rank-3 and rank-2 parametrizations") {
  CounterRng rng(16, 25);
  SUBCASE("hadamard k=1 n=3 attains rank 3") {
    std::size_t best = 0;
    for (int t = 0; t < 100; ++t) {
      std::vector<std::vector<u64>> a(3, std::vector<u64>(1));
      for (auto& v : a) v[0] = F.random(rng);
      std::vector<u64> s(3), tt(3);
      for (auto& x : s) x = F.random(rng);
      for (auto& x : tt) x = F.random(rng);
      const auto x = hadamard_r3(1, 3, a, s, tt, F);
      CHECK(x.rank(F) <= 3);
      best = std::max(best, x.rank(F));
    }
    CHECK(best == 3);
  }
  SUBCASE("bipartition swap gives the same matrix") {
    const int k = 2, n = 4;
    std::vector<std::vector<u64>> a((std::size_t)n, std::vector<u64>((std::size_t)k));
    for (auto& v : a)
      for (auto& x : v) x = F.random(rng);
    std::vector<bool> in_I{true, false, true, false};
    std::vector<bool> comp{false, true, false, true};
    CHECK(segre_r2(k, n, in_I, a, F) == segre_r2(k, n, comp, a, F));
    CHECK_THROWS_AS((void)segre_r2(k, n, std::vector<bool>(4, true), a, F),
                    std::invalid_argument);
  }
  SUBCASE("two-block bipartition is one rank-1 block") {
    const int k = 2, n = 2;
    std::vector<std::vector<u64>> a(2, std::vector<u64>(2));
    for (auto& v : a)
      for (auto& x : v) x = F.random(rng);
    const auto x = segre_r2(k, n, {true, false}, a, F);
    paramzoo::FpMatrix blk(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        blk.at((std::size_t)i, (std::size_t)j) = x.at((std::size_t)i, (std::size_t)(2 + j));
    CHECK(blk.rank(F) == 1);
    CHECK(x.rank(F) == 2);
  }
}
