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

#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "interp/interp.hpp"

using namespace isogram;
using namespace isogram::interp;
using algebra::PrimeField;
using algebra::u64;

namespace {
const PrimeField F(algebra::kDefaultPrime);
const PrimeField F2(algebra::kDefaultSecondPrime);

GradedDegree deg(std::vector<int> e, std::vector<int> f) {
  return GradedDegree{std::move(e), std::move(f)};
}
}  // namespace

TEST_CASE("graded degrees") {
  auto d = deg({2, 2, 2, 1}, {2, 2, 2, 1});
  CHECK(d.z() == 7);
  CHECK(deg({3, 2, 2, 2}, {2, 1, 1, 1}).z() == 7);  // P factors present
  CHECK(deg({1, 1, 0}, {0, 0, 0}).z() == 1);
  CHECK(deg({2, 2, 2, 2}, {2, 2, 2, 2}).z() == 8);
  CHECK(d.leq(deg({2, 2, 2, 2}, {2, 2, 2, 2})));
  CHECK_FALSE(deg({3, 0, 0, 0}, {1, 0, 0, 0}).leq(d));
}

TEST_CASE("variable degrees and the coarse grading") {
  const PhvRing ring(4);
  CHECK(ring.var_count() == 24);
  // P12 has degree e1+e2, H12 adds f1+f2, V1xx has e1+f1
  const auto& p12 = ring.var_degree(ring.layout().pidx(1, 2));
  CHECK(p12.e == std::vector<int>{1, 1, 0, 0});
  CHECK(p12.f == std::vector<int>{0, 0, 0, 0});
  const auto& h12 = ring.var_degree(ring.layout().hidx(1, 2));
  CHECK(h12.e == std::vector<int>{1, 1, 0, 0});
  CHECK(h12.f == std::vector<int>{1, 1, 0, 0});
  const auto& v134 = ring.var_degree(ring.layout().vidx(1, 3, 4));
  CHECK(v134.e == std::vector<int>{1, 0, 0, 0});
  CHECK(v134.f == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("monomial enumeration matches the published counts") {
  const PhvRing ring(4);
  auto count = [&](std::vector<int> e, std::vector<int> f) {
    return (long long)enumerate_monomials(ring, deg(std::move(e), std::move(f)))
        .monomials.size();
  };
  CHECK(count({2, 2, 2, 1}, {2, 2, 2, 1}) == 1812);
  CHECK(count({4, 4, 0, 0}, {4, 4, 0, 0}) == 371);
  CHECK(count({3, 3, 1, 0}, {3, 3, 1, 0}) == 600);
  CHECK(count({4, 4, 1, 1}, {3, 3, 0, 0}) == 438);
  CHECK(count({4, 4, 2, 2}, {2, 2, 0, 0}) == 276);
  // multidegree constraint holds for every listed monomial
  const auto basis = enumerate_monomials(ring, deg({3, 3, 1, 0}, {3, 3, 1, 0}));
  for (const auto& m : basis.monomials) {
    GradedDegree total{std::vector<int>(4, 0), std::vector<int>(4, 0)};
    for (std::size_t v = 0; v < m.size(); ++v) {
      const auto& vd = ring.var_degree((int)v);
      for (int i = 0; i < 4; ++i) {
        total.e[(std::size_t)i] += m[v] * vd.e[(std::size_t)i];
        total.f[(std::size_t)i] += m[v] * vd.f[(std::size_t)i];
      }
    }
    CHECK(total == basis.degree);
  }
}

TEST_CASE("enumeration agrees with the independent counting recursion") {
  const PhvRing r4(4);
  for (auto d : {deg({2, 2, 2, 1}, {2, 2, 2, 1}), deg({3, 2, 2, 0}, {3, 2, 2, 0}),
                 deg({2, 1, 1, 0}, {1, 1, 0, 0}), deg({4, 4, 0, 0}, {4, 4, 0, 0})})
    CHECK((long long)enumerate_monomials(r4, d).monomials.size() ==
          count_monomials_bruteforce(r4, d));
  const PhvRing r3(3);
  CHECK((long long)enumerate_monomials(r3, deg({1, 1, 0}, {0, 0, 0})).monomials.size() ==
        count_monomials_bruteforce(r3, deg({1, 1, 0}, {0, 0, 0})));
}

TEST_CASE("single P monomial in its own degree") {
  const PhvRing ring(3);
  const auto basis = enumerate_monomials(ring, deg({1, 1, 0}, {0, 0, 0}));
  REQUIRE(basis.monomials.size() == 1);
  ExpVec expect((std::size_t)ring.var_count(), 0);
  expect[(std::size_t)ring.layout().pidx(1, 2)] = 1;
  CHECK(basis.monomials[0] == expect);
}

TEST_CASE("orbits of degrees") {
  CHECK(orbit_expand(deg({2, 2, 2, 1}, {2, 2, 2, 1})).size() == 4);
  CHECK(orbit_expand(deg({3, 2, 1, 1}, {3, 2, 1, 1})).size() == 12);
  CHECK(orbit_expand(deg({3, 2, 2, 2}, {2, 1, 1, 1})).size() == 4);
  CHECK(orbit_expand(deg({4, 4, 0, 0}, {4, 4, 0, 0})).size() == 6);
  CHECK(orbit_expand(deg({2, 2, 2, 2}, {2, 2, 2, 2})).size() == 1);
  // the published example degree is a relabeling of the table row
  CHECK(orbit_rep(deg({2, 1, 2, 2}, {2, 1, 2, 2})) ==
        orbit_rep(deg({2, 2, 2, 1}, {2, 2, 2, 1})));
}

TEST_CASE("relation spaces for three fields") {
  const PhvRing ring(3);
  SamplePool pool(3, 5, F, 1);
  // principal ideal: nothing below the determinant degree
  for (auto d : {deg({1, 1, 1}, {1, 1, 1}), deg({2, 2, 1}, {2, 2, 1}),
                 deg({2, 2, 2}, {1, 1, 0}), deg({2, 1, 1}, {1, 1, 0})}) {
    REQUIRE(d.z() < 6);
    const auto rel = relation_space(ring, pool, d);
    CHECK(rel.kernel.empty());
  }
  const auto rel = relation_space(ring, pool, deg({2, 2, 2}, {2, 2, 2}));
  CHECK(rel.kernel.size() == 1);
  // the relation is proportional to the transcribed sextic
  const auto basis = enumerate_monomials(ring, deg({2, 2, 2}, {2, 2, 2}));
  const auto sextic = fixtures::three_field_sextic(ring);
  std::vector<u64> vec(basis.monomials.size(), 0);
  for (const auto& [mono, coef] : sextic.terms()) {
    ExpVec e(mono.exp.begin(), mono.exp.end());
    const auto it = std::find(basis.monomials.begin(), basis.monomials.end(), e);
    REQUIRE(it != basis.monomials.end());
    vec[(std::size_t)(it - basis.monomials.begin())] = F.from_int(coef);
  }
  u64 ratio = 0;
  bool prop = true;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if ((vec[i] == 0) != (rel.kernel[0][i] == 0)) prop = false;
    if (!prop || vec[i] == 0) continue;
    const u64 r = F.mul(vec[i], F.inv(rel.kernel[0][i]));
    if (!ratio) ratio = r;
    prop &= r == ratio;
  }
  CHECK(prop);
}

TEST_CASE("relation space dimensions for four fields") {
  const PhvRing ring(4);
  SamplePool pool(4, 5, F, 1);
  CHECK(relation_space(ring, pool, deg({4, 4, 0, 0}, {4, 4, 0, 0})).kernel.size() == 1);
  CHECK(relation_space(ring, pool, deg({0, 1, 1, 1}, {0, 1, 1, 1})).kernel.size() == 1);
}

TEST_CASE("minimal generator counting with the ledger") {
  const PhvRing ring(4);
  SamplePool pool(4, 5, F, 1);
  Ledger ledger(4, 5, F.modulus());
  const auto scan = ensure_scanned(ring, pool, deg({3, 3, 1, 0}, {3, 3, 1, 0}), ledger);
  CHECK(scan.monomial_count == 600);
  CHECK(scan.relation_dim == 47);
  CHECK(scan.lower_ideal_dim == 46);
  CHECK(scan.mingen_count == 1);
  CHECK(scan.orbit_size == 12);

  // the ledger now holds the whole orbit of every scanned degree
  CHECK(ledger.has(deg({3, 1, 3, 0}, {3, 1, 3, 0})));
  CHECK(ledger.has(deg({0, 1, 1, 1}, {0, 1, 1, 1})));

  // asking directly for a missing divisor errors out
  Ledger fresh(4, 5, F.modulus());
  CHECK_THROWS_WITH_AS(
      (void)mingen_count(ring, pool, deg({3, 3, 1, 0}, {3, 3, 1, 0}), fresh),
      doctest::Contains("ledger missing divisor"), std::runtime_error);
}

TEST_CASE("ledger file round trip") {
  const PhvRing ring(4);
  SamplePool pool(4, 5, F, 1);
  Ledger ledger(4, 5, F.modulus());
  (void)ensure_scanned(ring, pool, deg({0, 1, 1, 1}, {0, 1, 1, 1}), ledger);
  const std::string path = "test_ledger_roundtrip.jsonl";
  ledger.save(path);
  const Ledger loaded = Ledger::load(path);
  CHECK(loaded.n() == 4);
  CHECK(loaded.r() == 5);
  CHECK(loaded.prime() == F.modulus());
  CHECK(loaded.entries().size() == ledger.entries().size());
  const auto* a = ledger.find(deg({0, 1, 1, 1}, {0, 1, 1, 1}));
  const auto* b = loaded.find(deg({0, 1, 1, 1}, {0, 1, 1, 1}));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(a->mingens == b->mingens);
  CHECK(a->relation_dim == b->relation_dim);
  std::filesystem::remove(path);
}

TEST_CASE("holdout validation across primes") {
  // generators found mod p vanish at fresh samples of the other pool
  const PhvRing ring(4);
  SamplePool pool(4, 5, F, 1);
  Ledger ledger(4, 5, F.modulus());
  const auto scan = ensure_scanned(ring, pool, deg({0, 2, 2, 2}, {0, 2, 2, 2}), ledger);
  CHECK(scan.mingen_count == 1);
  // dims agree over the second prime
  SamplePool pool2(4, 5, F2, 1);
  Ledger ledger2(4, 5, F2.modulus());
  const auto scan2 = ensure_scanned(ring, pool2, deg({0, 2, 2, 2}, {0, 2, 2, 2}), ledger2);
  CHECK(scan2.relation_dim == scan.relation_dim);
  CHECK(scan2.mingen_count == scan.mingen_count);
}

TEST_CASE("lifting relations to rational coefficients") {
  SUBCASE("the r=4 three-field binomials have unit coefficients") {
    const PhvRing ring(3);
    SamplePool pool(3, 4, F, 1);
    SamplePool pool2(3, 4, F2, 1);
    const auto rel = relation_space(ring, pool, deg({1, 1, 0}, {1, 1, 0}));
    REQUIRE(rel.kernel.size() == 1);
    const auto lifts = lift_relations(ring, rel.basis, rel.kernel, F, pool2);
    REQUIRE(lifts.size() == 1);
    CHECK(lifts[0].lifted);
    CHECK(lifts[0].verified);
    for (const auto& [m, c] : lifts[0].poly.terms())
      CHECK((c == 1 || c == -1));
    CHECK(lifts[0].poly.term_count() == 2);  // H12 and a V-product
  }
  SUBCASE("the sextic lifts to the transcribed expansion") {
    const PhvRing ring(3);
    SamplePool pool(3, 5, F, 1);
    SamplePool pool2(3, 5, F2, 1);
    const auto rel = relation_space(ring, pool, deg({2, 2, 2}, {2, 2, 2}));
    REQUIRE(rel.kernel.size() == 1);
    auto lifts = lift_relations(ring, rel.basis, rel.kernel, F, pool2);
    REQUIRE(lifts.size() == 1);
    REQUIRE(lifts[0].lifted);
    CHECK(lifts[0].verified);
    // match the fixture up to a global sign
    const auto fixture = fixtures::three_field_sextic(ring);
    algebra::QPoly target = algebra::QPoly::zero(ring.poly_ring());
    for (const auto& [m, c] : fixture.terms())
      target.add_term(m, algebra::BigRational((long)c));
    const bool same = lifts[0].poly == target;
    algebra::QPoly neg = lifts[0].poly;
    neg.scale(algebra::BigRational(-1));
    CHECK((same || neg == target));
  }
  SUBCASE("planted rational coefficients are recovered") {
    // synthetic rank-deficient system with a planted small-rational kernel
    const PhvRing ring(3);
    SamplePool pool2(3, 5, F2, 1);
    // plant c = (1/3, -2, 7/5) on three monomials of one degree
    const auto basis = enumerate_monomials(ring, deg({2, 2, 2}, {2, 2, 2}));
    REQUIRE(basis.monomials.size() >= 3);
    std::vector<u64> planted(basis.monomials.size(), 0);
    planted[0] = F.mul(1, F.inv(3));
    planted[1] = F.from_int(-2);
    planted[2] = F.mul(7, F.inv(5));
    // no verification against samples is meaningful here; only reconstruction
    const auto lifts = lift_relations(ring, basis, {planted}, F, pool2, 0);
    REQUIRE(lifts.size() == 1);
    CHECK(lifts[0].lifted);
    // cleared denominators: (5, -30, 21)
    std::vector<algebra::BigRational> got;
    for (const auto& [m, c] : lifts[0].poly.terms()) got.push_back(c);
    REQUIRE(got.size() == 3);
    CHECK(got[0] * 21 == got[2] * 5);
  }
  SUBCASE("unreconstructible coefficients are reported") {
    const PhvRing ring(3);
    SamplePool pool2(3, 5, F2, 1);
    const auto basis = enumerate_monomials(ring, deg({2, 2, 2}, {2, 2, 2}));
    // generic residues have no small rational preimage
    std::vector<u64> junk(basis.monomials.size(), 0);
    algebra::CounterRng rng(77, 1);
    junk[0] = F.random(rng);
    junk[1] = F.random(rng);
    const auto lifts = lift_relations(ring, basis, {junk}, F, pool2, 0);
    REQUIRE(lifts.size() == 1);
    CHECK_FALSE(lifts[0].lifted);
    CHECK(lifts[0].note.find("reconstruction failed") != std::string::npos);
  }
  SUBCASE("small-multiplier strategy") {
    const PhvRing ring(3);
    SamplePool pool(3, 4, F, 1);
    SamplePool pool2(3, 4, F2, 1);
    const auto rel = relation_space(ring, pool, deg({1, 1, 0}, {1, 1, 0}));
    const auto lifts = lift_relations(ring, rel.basis, rel.kernel, F, pool2, 50, true);
    REQUIRE(lifts.size() == 1);
    CHECK(lifts[0].lifted);
    CHECK(lifts[0].verified);
  }
}

TEST_CASE("fixtures vanish at sampled points") {
  const PhvRing ring4(4);
  SamplePool null5(4, 5, F, 1);
  SamplePool spin4(4, 4, F, 1);
  for (const auto& p : fixtures::rank5_cubics(ring4))
    CHECK(vanish_check(ring4, p, null5, 20));
  for (const auto& p : fixtures::rank4_generators(ring4))
    CHECK(vanish_check(ring4, p, spin4, 20));
  CHECK(vanish_check(ring4, fixtures::degree7_generator55(ring4), null5, 20));
  // a perturbed fixture does not vanish
  auto broken = fixtures::degree7_generator55(ring4);
  broken += algebra::Poly::variable(ring4.poly_ring(), 0).pow(7);
  CHECK_FALSE(vanish_check(ring4, broken, null5, 20));
  // the quadrics vanish on the rank-4 pool but not on the rank-5 pool
  const auto quadrics = fixtures::hv_quadrics(ring4);
  for (const auto& q : quadrics) CHECK(vanish_check(ring4, q, spin4, 20));
  CHECK_FALSE(vanish_check(ring4, quadrics[0], null5, 5));
}

TEST_CASE("three-field determinant identity holds symbolically") {
  CHECK(fixtures::three_field_det_identity_symbolic());
}

TEST_CASE("achievable degrees") {
  const PhvRing ring(3);
  const auto degs = achievable_degrees_z(ring, 2);
  // z=1: P's and V's; z=2: H's and all products of two z=1 variables
  for (const auto& d : degs) {
    CHECK(d.z() >= 1);
    CHECK(d.z() <= 2);
    CHECK(enumerate_monomials(ring, d).monomials.size() > 0);
  }
  // f <= e componentwise for every achievable degree
  for (const auto& d : degs)
    for (int i = 0; i < 3; ++i) CHECK(d.f[(std::size_t)i] <= d.e[(std::size_t)i]);
}
