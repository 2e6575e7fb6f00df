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

#include "gramvar/gramvar.hpp"
#include "interp/interp.hpp"

namespace isogram::interp::fixtures {

using algebra::Poly;
using algebra::RationalFunction;

namespace {

Poly var(const PhvRing& r, int idx) {
  return Poly::variable(r.poly_ring(), (std::size_t)idx);
}
Poly P(const PhvRing& r, int i, int j) { return var(r, r.layout().pidx(i, j)); }
Poly H(const PhvRing& r, int i, int j) { return var(r, r.layout().hidx(i, j)); }
Poly V(const PhvRing& r, int i, int j, int k) {
  int sign;
  Poly v = var(r, r.layout().vidx_signed(i, j, k, sign));
  return sign > 0 ? v : -v;
}

}  // namespace

Poly three_field_sextic(const PhvRing& ring) {
  if (ring.n() != 3) throw std::invalid_argument("three_field_sextic: needs n = 3");
  Poly bracket = V(ring, 1, 2, 3) * H(ring, 2, 3) - V(ring, 2, 1, 3) * H(ring, 1, 3) +
                 V(ring, 3, 1, 2) * H(ring, 1, 2) +
                 V(ring, 1, 2, 3) * V(ring, 2, 1, 3) * V(ring, 3, 1, 2);
  Poly lead = H(ring, 1, 2) * H(ring, 2, 3) * H(ring, 1, 3);
  return lead.scale(4) - bracket * bracket;
}

std::vector<Poly> hv_quadrics(const PhvRing& ring) {
  std::vector<Poly> out;
  for (int s = 1; s <= ring.n(); ++s)
    for (int t = s + 1; t <= ring.n(); ++t)
      for (int k = 1; k <= ring.n(); ++k) {
        if (k == s || k == t) continue;
        out.push_back(H(ring, s, t) + V(ring, s, k, t) * V(ring, t, k, s));
      }
  return out;
}

std::vector<std::vector<Poly>> v_matrix(const PhvRing& ring) {
  if (ring.n() != 4) throw std::invalid_argument("v_matrix: needs n = 4");
  const PhvRing& r = ring;
  return {
      {V(r, 1, 2, 3), V(r, 1, 2, 4), V(r, 1, 3, 4)},
      {V(r, 2, 1, 4), V(r, 2, 1, 3), -V(r, 2, 3, 4)},
      {V(r, 3, 1, 4), V(r, 3, 2, 4), -V(r, 3, 1, 2)},
      {V(r, 4, 2, 3), V(r, 4, 1, 3), V(r, 4, 1, 2)},
  };
}

std::vector<Poly> v_matrix_kernel(const PhvRing& ring) {
  const PhvRing& r = ring;
  return {P(r, 2, 3) * P(r, 1, 4), -(P(r, 2, 4) * P(r, 1, 3)),
          P(r, 3, 4) * P(r, 1, 2)};
}

std::vector<Poly> rank5_cubics(const PhvRing& ring) {
  auto m = v_matrix(ring);
  auto ker = v_matrix_kernel(ring);
  std::vector<Poly> out;
  // 3x3 minors, one per deleted row
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> rows;
    for (int i = 0; i < 4; ++i)
      if (i != skip) rows.push_back(i);
    Poly det = m[(std::size_t)rows[0]][0] *
                   (m[(std::size_t)rows[1]][1] * m[(std::size_t)rows[2]][2] -
                    m[(std::size_t)rows[1]][2] * m[(std::size_t)rows[2]][1]) -
               m[(std::size_t)rows[0]][1] *
                   (m[(std::size_t)rows[1]][0] * m[(std::size_t)rows[2]][2] -
                    m[(std::size_t)rows[1]][2] * m[(std::size_t)rows[2]][0]) +
               m[(std::size_t)rows[0]][2] *
                   (m[(std::size_t)rows[1]][0] * m[(std::size_t)rows[2]][1] -
                    m[(std::size_t)rows[1]][1] * m[(std::size_t)rows[2]][0]);
    out.push_back(std::move(det));
  }
  for (int i = 0; i < 4; ++i) {
    Poly prod = m[(std::size_t)i][0] * ker[0] + m[(std::size_t)i][1] * ker[1] +
                m[(std::size_t)i][2] * ker[2];
    out.push_back(std::move(prod));
  }
  return out;
}

std::vector<Poly> rank4_generators(const PhvRing& ring) {
  auto m = v_matrix(ring);
  auto ker = v_matrix_kernel(ring);
  std::vector<Poly> out;
  // 2x2 minors of the 4x3 matrix
  for (int r1 = 0; r1 < 4; ++r1)
    for (int r2 = r1 + 1; r2 < 4; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2)
          out.push_back(m[(std::size_t)r1][(std::size_t)c1] * m[(std::size_t)r2][(std::size_t)c2] -
                        m[(std::size_t)r1][(std::size_t)c2] * m[(std::size_t)r2][(std::size_t)c1]);
  // kernel products
  for (int i = 0; i < 4; ++i)
    out.push_back(m[(std::size_t)i][0] * ker[0] + m[(std::size_t)i][1] * ker[1] +
                  m[(std::size_t)i][2] * ker[2]);
  // V S V^T with S = [[0,1,-1],[1,0,1],[-1,1,0]]
  const long long S[3][3] = {{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Poly acc = Poly::zero(ring.poly_ring());
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          if (!S[a][b]) continue;
          Poly t = m[(std::size_t)i][(std::size_t)a] * m[(std::size_t)j][(std::size_t)b];
          acc += t.scale(S[a][b]);
        }
      out.push_back(std::move(acc));
    }
  for (auto& q : hv_quadrics(ring)) out.push_back(std::move(q));
  return out;
}

Poly degree7_generator55(const PhvRing& ring) {
  if (ring.n() != 4)
    throw std::invalid_argument("degree7_generator55: needs n = 4");
  struct Term { long long c; const char* mono; };
  // V abc = V_{a,bc}, H ab = H_{ab}; products as written in the source basis
  static const Term kTerms[] = {
      {+1, "V123 V134 V213 V314 V314 V413 V412"},
      {+1, "V123 V134 V234 V314 V314 V413 V413"},
      {+1, "V134 V134 V213 V314 V314 V413 V412"},
      {-1, "V134 V134 V214 V314 V324 V413 V412"},
      {+1, "V134 V134 V234 V314 V314 V413 V413"},
      {-1, "V134 V134 V234 V314 V324 V423 V413"},
      {-2, "H13 V123 V213 V314 V412 V412"},
      {+2, "H13 V123 V213 V314 V413 V412"},
      {-2, "H13 V123 V234 V314 V413 V412"},
      {+2, "H13 V123 V234 V314 V413 V413"},
      {+2, "H13 V124 V214 V314 V412 V412"},
      {-1, "H13 V124 V214 V314 V413 V412"},
      {+2, "H13 V124 V234 V314 V423 V412"},
      {-1, "H13 V124 V234 V314 V423 V413"},
      {+2, "H13 V134 V213 V314 V413 V412"},
      {-1, "H13 V134 V214 V314 V413 V412"},
      {-1, "H13 V134 V214 V324 V413 V412"},
      {+2, "H13 V134 V234 V314 V413 V413"},
      {-1, "H13 V134 V234 V314 V423 V413"},
      {-1, "H13 V134 V234 V324 V423 V413"},
      {-1, "H14 V123 V213 V314 V314 V412"},
      {-1, "H14 V123 V234 V314 V314 V413"},
      {-1, "H14 V134 V213 V314 V314 V412"},
      {+1, "H14 V134 V214 V314 V324 V412"},
      {-1, "H14 V134 V234 V314 V314 V413"},
      {+1, "H14 V134 V234 V314 V324 V423"},
      {+1, "H34 V123 V134 V213 V314 V412"},
      {+1, "H34 V123 V134 V234 V314 V413"},
      {+1, "H34 V134 V134 V213 V314 V412"},
      {-1, "H34 V134 V134 V214 V324 V412"},
      {+1, "H34 V134 V134 V234 V314 V413"},
      {-1, "H34 V134 V134 V234 V324 V423"},
      {+1, "H13 H13 V213 V413 V412"},
      {-2, "H13 H13 V213 V423 V412"},
      {+1, "H13 H13 V213 V423 V413"},
      {+1, "H13 H13 V214 V413 V412"},
      {-1, "H13 H13 V214 V413 V413"},
      {+1, "H13 H13 V234 V413 V413"},
      {-1, "H13 H13 V234 V423 V413"},
      {-1, "H13 H14 V213 V314 V412"},
      {-1, "H13 H14 V213 V314 V423"},
      {-1, "H13 H14 V214 V314 V412"},
      {+1, "H13 H14 V214 V314 V413"},
      {+2, "H13 H14 V214 V324 V412"},
      {-1, "H13 H14 V234 V314 V413"},
      {-1, "H13 H14 V234 V314 V423"},
      {+2, "H13 H14 V234 V324 V423"},
      {+1, "H13 H34 V123 V213 V412"},
      {+1, "H13 H34 V123 V234 V413"},
      {+1, "H13 H34 V124 V214 V412"},
      {+1, "H13 H34 V124 V234 V423"},
      {+1, "H13 H34 V134 V213 V412"},
      {-1, "H13 H34 V134 V214 V412"},
      {+1, "H13 H34 V134 V234 V413"},
      {-1, "H13 H34 V134 V234 V423"},
  };
  Poly out = Poly::zero(ring.poly_ring());
  for (const Term& t : kTerms) {
    Poly term = Poly::constant(ring.poly_ring(), t.c);
    const std::string s(t.mono);
    std::size_t pos = 0;
    while (pos < s.size()) {
      while (pos < s.size() && s[pos] == ' ') ++pos;
      if (pos >= s.size()) break;
      const char type = s[pos];
      if (type == 'H') {
        const int i = s[pos + 1] - '0', j = s[pos + 2] - '0';
        term *= H(ring, i, j);
        pos += 3;
      } else {
        const int i = s[pos + 1] - '0', j = s[pos + 2] - '0', k = s[pos + 3] - '0';
        term *= V(ring, i, j, k);
        pos += 4;
      }
    }
    out += term;
  }
  return out;
}

bool three_field_det_identity_symbolic() {
  using gramvar::SymbolicMatrix;
  const SymbolicMatrix x = SymbolicMatrix::block_zero(2, 3);
  auto ring = x.ring();
  auto ent = [&](int i, int j) {  // 1-based, zero-aware
    const int v = x.entry(i - 1, j - 1);
    return v < 0 ? Poly::zero(ring) : Poly::variable(ring, (std::size_t)v);
  };
  auto Pp = [&](int i, int j) { return ent(2 * i - 1, 2 * j - 1); };
  auto Hp = [&](int i, int j) {
    return ent(2 * i - 1, 2 * j - 1) * ent(2 * i, 2 * j) -
           ent(2 * i, 2 * j - 1) * ent(2 * j, 2 * i - 1);
  };
  auto Vr = [&](int i, int j, int k) {
    Poly num = ent(2 * i, 2 * j - 1) * ent(2 * k - 1, 2 * i - 1) -
               ent(2 * i, 2 * k - 1) * ent(2 * j - 1, 2 * i - 1);
    return RationalFunction(std::move(num), Pp(j, k));
  };
  const RationalFunction v123 = Vr(1, 2, 3), v213 = Vr(2, 1, 3), v312 = Vr(3, 1, 2);
  auto lift = [&](Poly p) { return RationalFunction::from_poly(std::move(p)); };
  RationalFunction bracket =
      v123 * lift(Hp(2, 3)) - v213 * lift(Hp(1, 3)) + v312 * lift(Hp(1, 2)) +
      v123 * v213 * v312;
  RationalFunction rhs =
      lift((Hp(1, 2) * Hp(2, 3) * Hp(1, 3)).scale(4)) - bracket * bracket;
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  Poly det = x.minor_kept(all, all);
  // det - rhs == 0 as a rational function
  return (lift(std::move(det)) - rhs).num.is_zero();
}

}  // namespace isogram::interp::fixtures
