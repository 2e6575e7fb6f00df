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

#include "verify/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "dimscan/dimscan.hpp"
#include "gramvar/gramvar.hpp"
#include "interp/interp.hpp"
#include "paramzoo/paramzoo.hpp"

namespace isogram::verify {

using algebra::CounterRng;
using algebra::PrimeField;
using algebra::u64;

namespace {

struct Suite {
  SuiteResult result;

  void check(const std::string& name, bool pass, const std::string& expected,
             const std::string& actual) {
    result.checks.push_back({name, pass, expected, actual});
    result.pass &= pass;
  }
  template <class T, class U>
  void check_eq(const std::string& name, const T& actual, const U& expected,
                const std::string& source) {
    std::ostringstream a, e;
    a << actual;
    e << expected << " [" << source << "]";
    check(name, actual == (T)expected, e.str(), a.str());
  }
};

// ---------------- criterion 1: minor identities ----------------

SuiteResult suite_plucker(const Options& opt) {
  Suite s;
  s.result.suite = "plucker";
  using gramvar::SymbolicMatrix;
  const SymbolicMatrix x = SymbolicMatrix::block_zero(2, 4);
  // the 70 deleted-pair identities on the 8x8 block-zero matrix
  int ok = 0, total = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int k = j + 1; k < 8; ++k)
        for (int l = k + 1; l < 8; ++l) {
          ++total;
          algebra::Poly t = x.minor_deleted(std::vector<int>{i, j}, std::vector<int>{k, l});
          t -= x.minor_deleted(std::vector<int>{i, k}, std::vector<int>{j, l});
          t += x.minor_deleted(std::vector<int>{i, l}, std::vector<int>{j, k});
          ok += t.is_zero();
        }
  s.check_eq("block-zero 8x8: deleted-pair identities", ok, total, "all 70 must vanish");
  s.check_eq("identity count", total, 70, "binom(8,4)");

  // random kept-index identities on generic symmetric matrices
  CounterRng rng(opt.seed, algebra::streams::kPlucker);
  int pass = 0;
  const int cases = 200;
  std::vector<SymbolicMatrix> generic;
  for (int m = 2; m <= 8; ++m) generic.push_back(SymbolicMatrix::generic(m));
  for (int c = 0; c < cases; ++c) {
    const int m = 2 + (int)rng.below(7);
    const SymbolicMatrix& g = generic[(std::size_t)(m - 2)];
    const int size = 1 + (int)rng.below((u64)(m - 1));  // size+1 <= m
    std::vector<int> pool;
    for (int i = 0; i < m; ++i) pool.push_back(i);
    // random subsets I (size-1) and J (size+1)
    auto pick = [&](int count) {
      std::vector<int> src = pool, out;
      for (int t = 0; t < count; ++t) {
        const std::size_t at = (std::size_t)rng.below((u64)src.size());
        out.push_back(src[at]);
        src.erase(src.begin() + (long)at);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto I = pick(size - 1);
    const auto J = pick(size + 1);
    pass += gramvar::plucker_check(g, I, J, size);
  }
  s.check_eq("generic symmetric m<=8: random identities", pass, cases,
             "holds for every symmetric matrix");
  return s.result;
}

// ---------------- criterion 2: minor census ----------------

SuiteResult suite_census(const Options& opt) {
  Suite s;
  s.result.suite = "census";
  using gramvar::SymbolicMatrix;
  const SymbolicMatrix x = SymbolicMatrix::block_zero(2, 4);
  auto terms = [&](std::vector<int> dr, std::vector<int> dc) {
    return (long long)x.minor_deleted(dr, dc).term_count();
  };
  s.check_eq("terms of the (12,12) minor", terms({0, 1}, {0, 1}), 40, "published value");
  s.check_eq("terms of the (12,23) minor", terms({0, 1}, {1, 2}), 92, "published value");
  s.check_eq("terms of the (12,34) minor", terms({0, 1}, {2, 3}), 150, "published value");
  s.check_eq("terms of the (13,24) minor", terms({0, 2}, {1, 3}), 115, "published value");
  const auto minors = gramvar::all_minors(x, 6);
  s.check_eq("distinct 6x6 minors of the 8x8", (long long)minors.size(), 406,
             "published value");
  for (u64 p : {opt.prime, opt.prime2}) {
    const PrimeField f(p);
    const auto span = gramvar::minor_span_dimension(x, 6, f, opt.seed);
    s.check_eq("span of 6x6 minors mod " + std::to_string(p), span.dimension, 336,
               "published value");
  }
  return s.result;
}

// ---------------- criterion 3: span table ----------------

SuiteResult suite_table1(const Options& opt) {
  Suite s;
  s.result.suite = "table1";
  struct Column {
    int k, n;
    std::vector<std::pair<int, int>> size_span;  // minor size -> expected span
  };
  std::vector<Column> cols = {
      {2, 4, {{2, 284}, {3, 1092}, {4, 1764}, {5, 1176}, {6, 336}, {7, 36}, {8, 1}}},
      {2, 3, {{3, 145}, {4, 105}, {5, 21}}},
  };
  if (opt.col_k) {
    std::vector<Column> keep;
    for (auto& c : cols)
      if (c.k == opt.col_k && c.n == opt.col_n) keep.push_back(c);
    if (keep.empty())
      throw std::invalid_argument("table1: no span targets recorded for that column");
    cols = keep;
  }
  for (const auto& col : cols) {
    const auto x = gramvar::SymbolicMatrix::block_zero(col.k, col.n);
    for (auto [size, expected] : col.size_span) {
      int first = -1;
      bool agree = true;
      for (u64 p : {opt.prime, opt.prime2}) {
        const PrimeField f(p);
        const auto span = gramvar::minor_span_dimension(x, size, f, opt.seed);
        if (first < 0) first = span.dimension;
        agree &= span.dimension == first;
      }
      std::ostringstream name;
      name << "(" << col.k << "," << col.n << ") size " << size << " span";
      s.check_eq(name.str(), first, expected, "table value");
      s.check(name.str() + " two-prime agreement", agree, "equal mod both primes",
              agree ? "equal" : "MISMATCH");
    }
  }
  return s.result;
}

// ---------------- criterion 4: dimension formulas ----------------

SuiteResult suite_dims(const Options& opt) {
  Suite s;
  s.result.suite = "dims";
  auto observed = [&](const dimscan::ParamMap& map, const std::string& name,
                      long long expected, const std::string& source) {
    int first = -1;
    bool agree = true, stable = true;
    for (u64 p : {opt.prime, opt.prime2}) {
      const PrimeField f(p);
      const auto rep = dimscan::image_dimension(map, f, opt.trials, opt.seed);
      if (first < 0) first = rep.reported_dimension;
      agree &= rep.reported_dimension == first;
      stable &= rep.stabilized;
    }
    s.check_eq(name, (long long)first, expected, source);
    s.check(name + " (two primes, stabilized)", agree && stable,
            "stable and equal mod both primes", agree && stable ? "yes" : "NO");
  };
  for (int n = 3; n <= 5; ++n) {
    observed(dimscan::segre_gram_map(2, n),
             "rank-2 image dim, n=" + std::to_string(n),
             gramvar::dim_formula({2, n, 2}), "dimension formula");
    observed(dimscan::hadamard_gram_map(2, n),
             "rank-3 image dim, n=" + std::to_string(n),
             gramvar::dim_formula({2, n, 3}), "dimension formula");
    observed(dimscan::spinor_gram_map(n),
             "rank-4 image dim, n=" + std::to_string(n),
             gramvar::dim_formula({2, n, 4}), "dimension formula");
    observed(dimscan::nullcone_gram_map(n),
             "rank-5 image dim, n=" + std::to_string(n),
             gramvar::dim_formula({2, n, 5}), "dimension formula");
    observed(dimscan::phv_map(n, 5), "invariant image dim r=5, n=" + std::to_string(n),
             6 * n - 10, "6n-10");
    observed(dimscan::phv_map(n, 4), "invariant image dim r=4, n=" + std::to_string(n),
             4 * n - 6, "4n-6");
  }
  return s.result;
}

// ---------------- criterion 5: two-point dimensions ----------------

SuiteResult suite_twopoint(const Options& opt) {
  Suite s;
  s.result.suite = "twopoint";
  for (int n = 3; n <= 10; ++n) {
    const int ambient = n * (n - 1) / 2 - 1;
    {
      int first = -1;
      bool agree = true;
      for (u64 p : {opt.prime, opt.prime2}) {
        const PrimeField f(p);
        const auto rep =
            dimscan::image_dimension(dimscan::twopoint_map(n, 5), f, opt.trials, opt.seed);
        if (first < 0) first = rep.reported_dimension;
        agree &= rep.reported_dimension == first;
      }
      const int expected = std::min(5 * n - 11, ambient);
      s.check_eq("two-point dim r=5, n=" + std::to_string(n), first, expected,
                 "min(5n-11, C(n,2)-1)");
      s.check("two-point r=5 two-prime agreement, n=" + std::to_string(n), agree,
              "equal", agree ? "equal" : "MISMATCH");
      if (n == 9)
        s.check("r=5, n=9 hypersurface in P^35", first == ambient - 1 && ambient == 35,
                "codimension 1 of P^35", "dim " + std::to_string(first));
    }
    {
      int first = -1;
      bool agree = true;
      for (u64 p : {opt.prime, opt.prime2}) {
        const PrimeField f(p);
        const auto rep =
            dimscan::image_dimension(dimscan::twopoint_map(n, 4), f, opt.trials, opt.seed);
        if (first < 0) first = rep.reported_dimension;
        agree &= rep.reported_dimension == first;
      }
      s.check_eq("two-point dim r=4, n=" + std::to_string(n), first, 3 * n - 7, "3n-7");
      s.check("two-point r=4 two-prime agreement, n=" + std::to_string(n), agree,
              "equal", agree ? "equal" : "MISMATCH");
      if (n == 5)
        s.check("r=4, n=5 hypersurface in P^9", first == ambient - 1 && ambient == 9,
                "codimension 1 of P^9", "dim " + std::to_string(first));
    }
  }
  return s.result;
}

// ---------------- criterion 6: interpolation tables ----------------

interp::GradedDegree deg4(std::initializer_list<int> e, std::initializer_list<int> f) {
  return interp::GradedDegree{std::vector<int>(e), std::vector<int>(f)};
}

SuiteResult suite_lemma54(const Options& opt) {
  Suite s;
  s.result.suite = "lemma54";
  const interp::PhvRing ring(4);
  std::vector<interp::ZScanSummary> sums;
  std::vector<interp::Ledger> ledgers;
  for (u64 p : {opt.prime, opt.prime2}) {
    const PrimeField f(p);
    interp::SamplePool pool(4, 5, f, opt.seed);
    interp::Ledger ledger(4, 5, p);
    sums.push_back(interp::scan_z_range(ring, pool, 6, ledger));
    ledgers.push_back(std::move(ledger));
  }
  s.check_eq("minimal generators in degrees <= 6", sums[0].total_mingens, 12,
             "published value");
  s.check("two-prime agreement on the scan",
          sums[0].total_mingens == sums[1].total_mingens &&
              sums[0].reps_with_mingens.size() == sums[1].reps_with_mingens.size(),
          "identical totals", "totals " + std::to_string(sums[0].total_mingens) + "/" +
                                  std::to_string(sums[1].total_mingens));
  // the three orbits: two cubic types and the sextic type
  s.check_eq("orbit classes with generators", (long long)sums[0].reps_with_mingens.size(),
             3, "two cubic orbits plus the sextic orbit");

  // the eight cubics coincide with the transcribed relation fixtures up to scale
  const PrimeField f(opt.prime);
  const auto cubics = interp::fixtures::rank5_cubics(ring);
  int matched = 0;
  for (const auto& cubic : cubics) {
    // multidegree of the fixture
    interp::GradedDegree d{std::vector<int>(4, 0), std::vector<int>(4, 0)};
    const auto& lead = cubic.terms().begin()->first;
    for (std::size_t v = 0; v < lead.exp.size(); ++v)
      for (std::uint32_t t = 0; t < lead.exp[v]; ++t) {
        const auto& vd = ring.var_degree((int)v);
        for (int i = 0; i < 4; ++i) {
          d.e[(std::size_t)i] += vd.e[(std::size_t)i];
          d.f[(std::size_t)i] += vd.f[(std::size_t)i];
        }
      }
    const interp::DegreeScan* scan = ledgers[0].find(d);
    if (!scan || scan->mingens.size() != 1) continue;
    // coefficient vector of the fixture over the degree's monomial basis
    const auto basis = interp::enumerate_monomials(ring, d);
    std::vector<u64> vec(basis.monomials.size(), 0);
    bool placed = true;
    for (const auto& [mono, coef] : cubic.terms()) {
      interp::ExpVec e(mono.exp.begin(), mono.exp.end());
      auto it = std::find(basis.monomials.begin(), basis.monomials.end(), e);
      if (it == basis.monomials.end()) { placed = false; break; }
      vec[(std::size_t)(it - basis.monomials.begin())] = f.from_int(coef);
    }
    if (!placed) continue;
    // proportionality to the stored generator
    const auto& gen = scan->mingens[0];
    u64 ratio = 0;
    bool prop = true;
    for (std::size_t i = 0; i < vec.size(); ++i) {
      if ((vec[i] == 0) != (gen[i] == 0)) { prop = false; break; }
      if (vec[i] == 0) continue;
      const u64 r = f.mul(vec[i], f.inv(gen[i]));
      if (ratio == 0) ratio = r;
      else if (ratio != r) { prop = false; break; }
    }
    matched += prop;
  }
  s.check_eq("eight cubics match the interpolated generators up to scale", matched, 8,
             "fixture comparison");
  return s.result;
}

struct LemmaRow {
  interp::GradedDegree degree;
  int orbit, monomials, dim, mingens;
  bool computed = true;  // false: use the recorded value in the total only
};

void run_rows(Suite& s, const Options& opt, const std::vector<LemmaRow>& rows,
              long long expected_total, const std::string& label) {
  const interp::PhvRing ring(4);
  long long total = 0;
  // two independent pipelines, one per prime
  std::vector<PrimeField> fields{PrimeField(opt.prime), PrimeField(opt.prime2)};
  std::vector<interp::SamplePool> pools;
  std::vector<interp::Ledger> ledgers;
  for (auto& f : fields) {
    pools.emplace_back(4, 5, f, opt.seed);
    ledgers.emplace_back(4, 5, f.modulus());
  }
  for (const auto& row : rows) {
    if (!row.computed) {
      total += (long long)row.orbit * row.mingens;
      s.check(label + " row " + row.degree.str() + " (recorded)", true,
              "taken from the table", "mingens " + std::to_string(row.mingens) +
                                          " x orbit " + std::to_string(row.orbit));
      continue;
    }
    std::vector<interp::DegreeScan> scans;
    for (std::size_t i = 0; i < fields.size(); ++i)
      scans.push_back(interp::ensure_scanned(ring, pools[i], row.degree, ledgers[i]));
    const auto& a = scans[0];
    s.check_eq(label + " row " + row.degree.str() + " monomials", a.monomial_count,
               row.monomials, "table value");
    s.check_eq(label + " row " + row.degree.str() + " relation dim", a.relation_dim,
               row.dim, "table value");
    s.check_eq(label + " row " + row.degree.str() + " mingens", a.mingen_count,
               row.mingens, "table value");
    s.check_eq(label + " row " + row.degree.str() + " orbit", a.orbit_size, row.orbit,
               "table value");
    s.check(label + " row " + row.degree.str() + " two-prime agreement",
            a.relation_dim == scans[1].relation_dim &&
                a.mingen_count == scans[1].mingen_count,
            "identical dims", "dims " + std::to_string(a.relation_dim) + "/" +
                                  std::to_string(scans[1].relation_dim));
    total += (long long)a.mingen_count * a.orbit_size;
  }
  s.check_eq(label + " orbit-weighted total", total, expected_total, "published value");
}

SuiteResult suite_lemma55(const Options& opt) {
  Suite s;
  s.result.suite = "lemma55";
  const std::vector<LemmaRow> rows = {
      {deg4({2, 2, 2, 1}, {2, 2, 2, 1}), 4, 1812, 285, 15},
      {deg4({3, 2, 1, 1}, {3, 2, 1, 1}), 12, 1375, 182, 5},
      {deg4({3, 2, 2, 0}, {3, 2, 2, 0}), 12, 784, 84, 2},
      {deg4({3, 3, 1, 0}, {3, 3, 1, 0}), 12, 600, 47, 1},
      {deg4({3, 2, 2, 2}, {2, 1, 1, 1}), 4, 945, 373, 1},
      {deg4({3, 3, 2, 1}, {2, 2, 1, 0}), 12, 540, 205, 1},
  };
  run_rows(s, opt, rows, 172, "degree-7");
  return s.result;
}

SuiteResult suite_lemma56(const Options& opt) {
  Suite s;
  s.result.suite = "lemma56";
  std::vector<LemmaRow> rows = {
      {deg4({2, 2, 2, 2}, {2, 2, 2, 2}), 1, 4539, 1048, 34, false},
      {deg4({3, 2, 2, 1}, {3, 2, 2, 1}), 12, 3426, 670, 14, false},
      {deg4({3, 3, 1, 1}, {3, 3, 1, 1}), 6, 2596, 423, 10, false},
      {deg4({3, 3, 2, 0}, {3, 3, 2, 0}), 12, 1480, 211, 9, false},
      {deg4({4, 2, 1, 1}, {4, 2, 1, 1}), 12, 2209, 327, 6, false},
      {deg4({4, 2, 2, 0}, {4, 2, 2, 0}), 12, 1261, 157, 6, false},
      {deg4({4, 3, 1, 0}, {4, 3, 1, 0}), 24, 965, 87, 3, false},
      {deg4({4, 4, 0, 0}, {4, 4, 0, 0}), 6, 371, 1, 1, true},
      {deg4({3, 3, 2, 2}, {2, 2, 1, 1}), 6, 2232, 1004, 12, false},
      {deg4({3, 3, 3, 1}, {2, 2, 2, 0}), 4, 1272, 558, 6, false},
      {deg4({4, 2, 2, 2}, {3, 1, 1, 1}), 4, 1704, 732, 3, false},
      {deg4({4, 3, 2, 1}, {3, 2, 1, 0}), 24, 975, 406, 3, false},
      {deg4({4, 4, 1, 1}, {3, 3, 0, 0}), 6, 438, 163, 1, true},
      {deg4({4, 3, 3, 2}, {2, 1, 1, 0}), 12, 474, 209, 1, false},
      {deg4({4, 4, 2, 2}, {2, 2, 0, 0}), 6, 276, 117, 1, true},
  };
  if (opt.heavy)
    for (auto& r : rows) r.computed = true;
  run_rows(s, opt, rows, 796, "degree-8");
  return s.result;
}

// ---------------- criterion 7: fixture vanishing ----------------

SuiteResult suite_fixtures(const Options& opt) {
  Suite s;
  s.result.suite = "fixtures";
  s.check("three-field determinant identity (symbolic)",
          interp::fixtures::three_field_det_identity_symbolic(), "identity of polynomials",
          "expanded");
  const PrimeField f(opt.prime);
  const int pts = 100;
  {
    const interp::PhvRing ring4(4);
    interp::SamplePool null5(4, 5, f, opt.seed);
    interp::SamplePool spin4(4, 4, f, opt.seed);
    int ok = 0;
    const auto cubics = interp::fixtures::rank5_cubics(ring4);
    for (const auto& p : cubics) ok += interp::vanish_check(ring4, p, null5, pts);
    s.check_eq("rank-5 cubics vanish on null-cone samples", ok, (int)cubics.size(),
               std::to_string(pts) + " points each");
    const auto gens4 = interp::fixtures::rank4_generators(ring4);
    ok = 0;
    for (const auto& p : gens4) ok += interp::vanish_check(ring4, p, spin4, pts);
    s.check_eq("rank-4 generator list vanishes on spinor samples", ok, (int)gens4.size(),
               std::to_string(pts) + " points each");
    const auto quadrics = interp::fixtures::hv_quadrics(ring4);
    ok = 0;
    for (const auto& p : quadrics) ok += interp::vanish_check(ring4, p, spin4, pts);
    s.check_eq("H+VV quadrics vanish on spinor samples", ok, (int)quadrics.size(),
               std::to_string(pts) + " points each");
    s.check("55-term degree-7 generator vanishes on null-cone samples",
            interp::vanish_check(ring4, interp::fixtures::degree7_generator55(ring4),
                                 null5, pts),
            std::to_string(pts) + " points", "checked");
  }
  {
    // degree-12 relation among the y coordinates
    CounterRng rng(opt.seed, algebra::streams::kSamples);
    int ok = 0, done = 0, perturbed_nonzero = 0;
    while (done < pts) {
      auto cfg = paramzoo::SpinorConfig::random(4, f, rng);
      auto y = paramzoo::cubed_grassmannian_point(cfg, f);
      if (!y) continue;
      ++done;
      ok += paramzoo::cubed_grassmannian_relation(*y, f) == 0;
      (*y)[0] = f.add((*y)[0], 1);
      perturbed_nonzero += paramzoo::cubed_grassmannian_relation(*y, f) != 0;
    }
    s.check_eq("degree-12 relation vanishes", ok, pts, "published identity");
    s.check_eq("perturbed coordinates break the relation", perturbed_nonzero, pts,
               "nonzero after y12 += 1");
  }
  return s.result;
}

// ---------------- criterion 8: component machinery ----------------

SuiteResult suite_components(const Options& opt) {
  Suite s;
  s.result.suite = "components";
  const PrimeField f(opt.prime);
  CounterRng rng(opt.seed, algebra::streams::kIsotropic);
  for (int k : {2, 3}) {
    int consistent = 0;
    for (int t = 0; t < 100; ++t) {
      try {
        paramzoo::FpMatrix y = paramzoo::isotropic_sample(
            k, 2 * k, paramzoo::QuadForm::alternating(2 * k), f, rng);
        if (y.rank(f) < (std::size_t)k) { ++consistent; continue; }  // degenerate draw
        (void)paramzoo::component_sign(y, f);
        ++consistent;
      } catch (const std::exception&) {
      }
    }
    s.check_eq("component sign consistent, k=" + std::to_string(k), consistent, 100,
               "all samples");
  }
  for (int k = 1; k <= 4; ++k) {
    const auto q = paramzoo::QuadForm::alternating(2 * k);
    for (bool same : {true, false}) {
      const bool expect_singular = paramzoo::parity_expect_singular(k, same);
      int singular = 0;
      const int pairs = 50;
      for (int t = 0; t < pairs; ++t) {
        const int s1 = rng.below(2) ? 1 : -1;
        const int s2 = same ? s1 : -s1;
        const auto x = paramzoo::sample_component(k, s1, f, rng);
        const auto y = paramzoo::sample_component(k, s2, f, rng);
        singular += paramzoo::pairing_det(x, y, q, f) == 0;
      }
      std::ostringstream name;
      name << "product parity k=" << k << (same ? " same" : " different")
           << " components";
      if (expect_singular)
        s.check_eq(name.str(), singular, pairs, "singular cell of the parity table");
      else
        s.check(name.str(), pairs - singular >= (pairs * 95 + 99) / 100,
                ">=95% invertible [parity table]",
                std::to_string(pairs - singular) + "/" + std::to_string(pairs) +
                    " invertible");
    }
  }
  {
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
      const int k = 2, n = 4;
      std::vector<bool> in_I((std::size_t)n, false);
      // random nonempty proper subset
      do {
        for (int i = 0; i < n; ++i) in_I[(std::size_t)i] = rng.below(2);
      } while (std::count(in_I.begin(), in_I.end(), true) == 0 ||
               std::count(in_I.begin(), in_I.end(), true) == n);
      std::vector<std::vector<u64>> a((std::size_t)n, std::vector<u64>((std::size_t)k));
      for (auto& v : a)
        for (auto& x : v) x = f.random(rng);
      ok += paramzoo::segre_r2(k, n, in_I, a, f).rank(f) == 2;
    }
    s.check_eq("rank-2 bipartite samples have rank 2", ok, 100, "construction");
  }
  {
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
      const int k = 2, n = 4;
      std::vector<std::vector<u64>> a((std::size_t)n, std::vector<u64>((std::size_t)k));
      for (auto& v : a)
        for (auto& x : v) x = f.random(rng);
      std::vector<u64> sv((std::size_t)n), tv((std::size_t)n);
      for (auto& x : sv) x = f.random(rng);
      for (auto& x : tv) x = f.random(rng);
      const auto x = paramzoo::hadamard_r3(k, n, a, sv, tv, f);
      bool good = x.rank(f) <= 3;
      for (int i = 0; i < n && good; ++i)
        for (int p = 0; p < k; ++p)
          for (int q = 0; q < k; ++q)
            good &= x.at((std::size_t)(k * i + p), (std::size_t)(k * i + q)) == 0;
      ok += good;
    }
    s.check_eq("rank-3 samples: rank <= 3 and zero diagonal blocks", ok, 100,
               "construction");
  }
  {
    int ok = 0;
    for (int t = 0; t < 100; ++t) {
      const int ell = 1, k = 2, n = 4;
      // symmetric with zero diagonal entries
      paramzoo::FpMatrix xs((std::size_t)(ell * n), (std::size_t)(ell * n));
      for (int i = 0; i < ell * n; ++i)
        for (int j = i + 1; j < ell * n; ++j) {
          const u64 v = f.random(rng);
          xs.at((std::size_t)i, (std::size_t)j) = v;
          xs.at((std::size_t)j, (std::size_t)i) = v;
        }
      std::vector<paramzoo::FpMatrix> a;
      for (int i = 0; i < n; ++i)
        a.push_back(paramzoo::FpMatrix::random((std::size_t)(k - ell), (std::size_t)ell,
                                               f, rng));
      const auto lifted = paramzoo::lowrank_lift(xs, ell, k, a, f);
      ok += lifted.rank(f) == xs.rank(f);
    }
    s.check_eq("block lift preserves rank", ok, 100, "construction");
  }
  return s.result;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"plucker", "census",  "table1",  "dims",     "twopoint",
          "lemma54", "lemma55", "lemma56", "fixtures", "components"};
}

SuiteResult run_suite(const std::string& name, const Options& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult res;
  if (name == "plucker") res = suite_plucker(opt);
  else if (name == "census") res = suite_census(opt);
  else if (name == "table1") res = suite_table1(opt);
  else if (name == "dims") res = suite_dims(opt);
  else if (name == "twopoint") res = suite_twopoint(opt);
  else if (name == "lemma54") res = suite_lemma54(opt);
  else if (name == "lemma55") res = suite_lemma55(opt);
  else if (name == "lemma56") res = suite_lemma56(opt);
  else if (name == "fixtures") res = suite_fixtures(opt);
  else if (name == "components") res = suite_components(opt);
  else throw std::invalid_argument("unknown suite: " + name);
  res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return res;
}

std::vector<SuiteResult> run_all(const Options& opt) {
  std::vector<SuiteResult> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace isogram::verify
