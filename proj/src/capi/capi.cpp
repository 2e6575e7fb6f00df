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

#include "isogram/isogram.h"

#include <chrono>
#include <cstring>
#include <filesystem>
#include <string>

#include "dimscan/dimscan.hpp"
#include "gramvar/gramvar.hpp"
#include "interp/interp.hpp"
#include "json.hpp"
#include "paramzoo/paramzoo.hpp"
#include "verify/verify.hpp"

using json = nlohmann::json;
using namespace isogram;
using algebra::CounterRng;
using algebra::PrimeField;
using algebra::u64;

struct isg_engine {
  u64 prime = algebra::kDefaultPrime;
  u64 prime2 = algebra::kDefaultSecondPrime;
  u64 seed = algebra::kDefaultSeed;
  int trials = 16;
};

struct isg_result {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

u64 parse_u64(const json& v) {
  if (v.is_string()) return std::stoull(v.get<std::string>());
  return v.get<u64>();
}

json base_report(const isg_engine* eng, const std::string& command) {
  json rep;
  rep["command"] = command;
  rep["version"] = isg_version();
  rep["prime"] = std::to_string(eng->prime);
  rep["prime2"] = std::to_string(eng->prime2);
  rep["seed"] = std::to_string(eng->seed);
  return rep;
}

isg_status finish(json rep, std::chrono::steady_clock::time_point t0,
                  isg_result** out) {
  rep["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
  *out = new isg_result{rep.dump(2)};
  return ISG_OK;
}

template <class Fn>
isg_status guarded(isg_result** out, Fn&& fn) {
  if (!out) {
    g_last_error = "null result pointer";
    return ISG_ERR_ARGUMENT;
  }
  *out = nullptr;
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ISG_ERR_ARGUMENT;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return ISG_ERR_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return ISG_ERR_STATE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISG_ERR_INTERNAL;
  }
}

json matrix_json(const paramzoo::FpMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(std::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json suite_json(const verify::SuiteResult& r) {
  json out;
  out["suite"] = r.suite;
  out["pass"] = r.pass;
  out["elapsed_ms"] = r.elapsed_ms;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cc;
    cc["name"] = c.name;
    cc["pass"] = c.pass;
    cc["expected"] = c.expected;
    cc["actual"] = c.actual;
    checks.push_back(std::move(cc));
  }
  out["checks"] = std::move(checks);
  return out;
}

json scan_json(const interp::DegreeScan& s) {
  json rec;
  rec["e"] = s.degree.e;
  rec["f"] = s.degree.f;
  rec["z"] = s.degree.z();
  rec["monomials"] = s.monomial_count;
  rec["relation_dim"] = s.relation_dim;
  rec["lower_dim"] = s.lower_ideal_dim;
  rec["mingens"] = s.mingen_count;
  rec["orbit"] = s.orbit_size;
  rec["samples"] = s.samples_used;
  rec["prime"] = std::to_string(s.prime);
  if (!s.lifted.empty()) rec["lifted"] = s.lifted;
  return rec;
}

}  // namespace

extern "C" {

const char* isg_version(void) { return "0.1.0"; }

const char* isg_last_error(void) { return g_last_error.c_str(); }

isg_status isg_engine_new(const char* config_json, isg_engine** out) {
  if (!out) return ISG_ERR_ARGUMENT;
  *out = nullptr;
  try {
    auto eng = std::make_unique<isg_engine>();
    if (config_json && *config_json) {
      json cfg = json::parse(config_json);
      if (cfg.contains("prime")) eng->prime = parse_u64(cfg["prime"]);
      if (cfg.contains("prime2")) eng->prime2 = parse_u64(cfg["prime2"]);
      if (cfg.contains("seed")) eng->seed = parse_u64(cfg["seed"]);
      if (cfg.contains("trials")) eng->trials = cfg["trials"].get<int>();
    }
    if (eng->prime == eng->prime2) {
      g_last_error = "prime and prime2 must differ";
      return ISG_ERR_ARGUMENT;
    }
    PrimeField f1(eng->prime);   // validates primality
    PrimeField f2(eng->prime2);
    if (eng->trials < 8) {
      g_last_error = "trials must be >= 8";
      return ISG_ERR_ARGUMENT;
    }
    *out = eng.release();
    return ISG_OK;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ISG_ERR_ARGUMENT;
  }
}

void isg_engine_free(isg_engine* eng) { delete eng; }

const char* isg_result_json(const isg_result* res) {
  return res ? res->text.c_str() : "";
}

void isg_result_free(isg_result* res) { delete res; }

isg_status isg_gram_formulas(isg_engine* eng, int k, int n, int r, isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    gramvar::GramSpec spec(k, n, r);
    json rep = base_report(eng, "gram formulas");
    rep["spec"] = {{"k", k}, {"n", n}, {"r", r}};
    json res;
    res["variable_count"] = gramvar::variable_count(k, n);
    if (n >= 3) res["invariant_count"] = gramvar::invariant_count(n);
    res["dimension"] = gramvar::dim_formula(spec);
    res["components"] = gramvar::component_count(spec).get_str();
    if (r >= 2 * k - 1 && r >= 1)
      res["expected_degree"] = gramvar::expected_degree(spec).get_str();
    if (r == 2 && n >= 3) {
      const auto segre = gramvar::segre_component_data(k, n);
      json rows = json::array();
      for (const auto& row : segre.rows)
        rows.push_back({{"i", row.i},
                        {"count", row.count.get_str()},
                        {"degree", row.degree.get_str()}});
      res["segre"] = {{"rows", rows},
                      {"as_stated_total", segre.as_stated_total.get_str()},
                      {"unordered_total", segre.unordered_total.get_str()},
                      {"totals_disagree", segre.totals_disagree}};
    }
    rep["results"] = std::move(res);
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_gram_minors(isg_engine* eng, int k, int n, int size,
                           int include_polynomials, isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto x = gramvar::SymbolicMatrix::block_zero(k, n);
    const auto minors = gramvar::all_minors(x, size);
    json rep = base_report(eng, "gram minors");
    rep["spec"] = {{"k", k}, {"n", n}, {"size", size}};
    json res;
    res["count"] = minors.size();
    res["count_closed_form"] = gramvar::all_minors_count(k * n, size).get_str();
    long long nonzero = 0;
    json items = json::array();
    for (const auto& [id, poly] : minors) {
      nonzero += !poly.is_zero();
      if (include_polynomials) {
        json item;
        item["deleted_rows"] = id.deleted_rows;
        item["deleted_cols"] = id.deleted_cols;
        item["terms"] = poly.term_count();
        item["poly"] = poly.to_string();
        items.push_back(std::move(item));
      }
    }
    res["nonzero"] = nonzero;
    if (include_polynomials) res["minors"] = std::move(items);
    rep["results"] = std::move(res);
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_gram_span_dim(isg_engine* eng, int k, int n, int size,
                             isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto x = gramvar::SymbolicMatrix::block_zero(k, n);
    json rep = base_report(eng, "gram span-dim");
    rep["spec"] = {{"k", k}, {"n", n}, {"size", size}};
    json res;
    int first = -1;
    bool agree = true;
    for (u64 p : {eng->prime, eng->prime2}) {
      const PrimeField f(p);
      const auto span = gramvar::minor_span_dimension(x, size, f, eng->seed);
      if (first < 0) {
        first = span.dimension;
        res["minors"] = span.minors;
        res["samples_used"] = span.samples_used;
      }
      agree &= span.dimension == first;
    }
    res["span_dimension"] = first;
    res["two_prime_agreement"] = agree;
    rep["results"] = std::move(res);
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_gram_plucker(isg_engine* eng, int m, int size, int count,
                            isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    if (size < 1 || size >= m)
      throw std::invalid_argument("plucker: need 1 <= size < m");
    const auto g = gramvar::SymbolicMatrix::generic(m);
    CounterRng rng(eng->seed, algebra::streams::kPlucker);
    int pass = 0;
    for (int c = 0; c < count; ++c) {
      std::vector<int> pool;
      for (int i = 0; i < m; ++i) pool.push_back(i);
      auto pick = [&](int cnt) {
        std::vector<int> src = pool, outv;
        for (int t = 0; t < cnt; ++t) {
          const std::size_t at = (std::size_t)rng.below((u64)src.size());
          outv.push_back(src[at]);
          src.erase(src.begin() + (long)at);
        }
        std::sort(outv.begin(), outv.end());
        return outv;
      };
      pass += gramvar::plucker_check(g, pick(size - 1), pick(size + 1), size);
    }
    json rep = base_report(eng, "gram plucker");
    rep["spec"] = {{"m", m}, {"size", size}, {"count", count}};
    rep["results"] = {{"pass", pass}, {"total", count}, {"all_hold", pass == count}};
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_sample(isg_engine* eng, const char* kind, int k, int n, int r,
                      int count, isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    if (!kind) throw std::invalid_argument("sample: kind is required");
    const std::string what(kind);
    const PrimeField f(eng->prime);
    CounterRng rng(eng->seed, algebra::streams::kSamples);
    json rep = base_report(eng, "sample " + what);
    rep["spec"] = {{"k", k}, {"n", n}, {"r", r}, {"count", count}};
    json records = json::array();
    for (int c = 0; c < count; ++c) {
      json rec;
      if (what == "nullcone") {
        const auto cfg = paramzoo::NullConeConfig::random(n, f, rng);
        const auto pw = paramzoo::nullcone_point(cfg, f);
        const auto x = paramzoo::gram_from_pw(pw, f);
        bool iso = true;
        for (int i = 0; i < n; ++i) {
          iso &= pw.form.dot(pw.P[(std::size_t)i], pw.P[(std::size_t)i], f) == 0;
          iso &= pw.form.dot(pw.P[(std::size_t)i], pw.W[(std::size_t)i], f) == 0;
          iso &= pw.form.dot(pw.W[(std::size_t)i], pw.W[(std::size_t)i], f) == 0;
        }
        rec["params"] = [&] {
          json a = json::array();
          for (u64 v : cfg.params) a.push_back(std::to_string(v));
          return a;
        }();
        rec["gram"] = matrix_json(x);
        rec["checks"] = {{"isotropy", iso}, {"rank_le_5", x.rank(f) <= 5}};
        const auto inv = paramzoo::invariants_from_gram(x, n, f);
        rec["invariants_defined"] = inv.has_value();
        if (inv) {
          json vals = json::array();
          for (u64 v : inv->values) vals.push_back(std::to_string(v));
          rec["phv"] = std::move(vals);
        }
      } else if (what == "spinor") {
        const auto cfg = paramzoo::SpinorConfig::random(n, f, rng);
        const auto sp = paramzoo::spinor_point(cfg, f);
        rec["defined"] = sp.has_value();
        if (sp) {
          rec["gram"] = matrix_json(sp->gram);
          bool hv = true;
          for (int s = 1; s <= n; ++s)
            for (int t = s + 1; t <= n; ++t)
              for (int kk = 1; kk <= n; ++kk) {
                if (kk == s || kk == t) continue;
                hv &= f.add(sp->phv.H(s, t), f.mul(sp->phv.V(s, kk, t, f),
                                                   sp->phv.V(t, kk, s, f))) == 0;
              }
          rec["checks"] = {{"rank_le_4", sp->gram.rank(f) <= 4},
                           {"hv_quadrics", hv}};
        }
      } else if (what == "isotropic") {
        const auto q = (r % 2 == 0) ? paramzoo::QuadForm::hyperbolic(r)
                                    : paramzoo::QuadForm::alternating(r);
        const auto y = paramzoo::isotropic_sample(k, r, q, f, rng);
        paramzoo::FpMatrix prod((std::size_t)k, (std::size_t)k);
        bool iso = true;
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            iso &= q.dot(std::span<const u64>(y.row((std::size_t)i), y.cols()),
                         std::span<const u64>(y.row((std::size_t)j), y.cols()),
                         f) == 0;
        rec["matrix"] = matrix_json(y);
        rec["checks"] = {{"isotropy", iso},
                         {"rank", y.rank(f)},
                         {"generic_rank", std::min(k, r / 2)}};
      } else if (what == "segre") {
        std::vector<bool> in_I((std::size_t)n, false);
        in_I[0] = true;
        std::vector<std::vector<u64>> a((std::size_t)n, std::vector<u64>((std::size_t)k));
        for (auto& v : a)
          for (auto& xv : v) xv = f.random(rng);
        const auto x = paramzoo::segre_r2(k, n, in_I, a, f);
        rec["matrix"] = matrix_json(x);
        rec["checks"] = {{"rank", x.rank(f)}, {"expected_rank", 2}};
      } else if (what == "hadamard") {
        std::vector<std::vector<u64>> a((std::size_t)n, std::vector<u64>((std::size_t)k));
        for (auto& v : a)
          for (auto& xv : v) xv = f.random(rng);
        std::vector<u64> sv((std::size_t)n), tv((std::size_t)n);
        for (auto& xv : sv) xv = f.random(rng);
        for (auto& xv : tv) xv = f.random(rng);
        const auto x = paramzoo::hadamard_r3(k, n, a, sv, tv, f);
        rec["matrix"] = matrix_json(x);
        rec["checks"] = {{"rank", x.rank(f)}, {"rank_bound", 3}};
      } else {
        throw std::invalid_argument("sample: unknown kind " + what);
      }
      records.push_back(std::move(rec));
    }
    rep["results"] = {{"records", std::move(records)}};
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_dim(isg_engine* eng, const char* target, int k, int n, int r,
                   isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    if (!target) throw std::invalid_argument("dim: target is required");
    const std::string what(target);
    dimscan::ParamMap map;
    if (what == "gram") {
      if (k != 2) throw std::invalid_argument("dim gram: parametrizations cover k=2");
      if (r == 5) map = dimscan::nullcone_gram_map(n);
      else if (r == 4) map = dimscan::spinor_gram_map(n);
      else if (r == 3) map = dimscan::hadamard_gram_map(k, n);
      else if (r == 2) map = dimscan::segre_gram_map(k, n);
      else throw std::invalid_argument("dim gram: r must be in {2,3,4,5}");
    } else if (what == "phv") {
      map = dimscan::phv_map(n, r);
    } else if (what == "twopoint") {
      map = dimscan::twopoint_map(n, r);
    } else {
      throw std::invalid_argument("dim: unknown target " + what);
    }
    json rep = base_report(eng, "dim " + what);
    rep["spec"] = {{"k", k}, {"n", n}, {"r", r}, {"trials", eng->trials}};
    json reports = json::array();
    int first = -1;
    bool agree = true;
    for (u64 p : {eng->prime, eng->prime2}) {
      const PrimeField f(p);
      const auto drep = dimscan::image_dimension(map, f, eng->trials, eng->seed);
      json jr;
      jr["prime"] = std::to_string(p);
      jr["observed_rank"] = drep.observed_rank;
      jr["reported_dimension"] = drep.reported_dimension;
      jr["stabilized"] = drep.stabilized;
      jr["trials"] = drep.trials;
      reports.push_back(std::move(jr));
      if (first < 0) first = drep.reported_dimension;
      agree &= drep.reported_dimension == first;
    }
    rep["results"] = {{"dimension", first},
                      {"cone", map.cone},
                      {"two_prime_agreement", agree},
                      {"reports", std::move(reports)}};
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_dim_conjecture(isg_engine* eng, int n_max, isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const PrimeField f(eng->prime);
    const auto rows = dimscan::conjecture_scan(3, n_max, f, eng->trials, eng->seed);
    json rep = base_report(eng, "dim conjecture");
    json jrows = json::array();
    bool all = true;
    for (const auto& row : rows) {
      jrows.push_back({{"n", row.n},
                       {"observed", row.observed},
                       {"predicted", row.predicted},
                       {"match", row.match}});
      all &= row.match;
    }
    rep["results"] = {{"rows", std::move(jrows)}, {"all_match", all}};
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_interp_scan(isg_engine* eng, int n, int r, int zmax,
                           const char* ledger_path, isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const interp::PhvRing ring(n);
    const PrimeField f(eng->prime), f2(eng->prime2);
    interp::SamplePool pool(n, r, f, eng->seed), pool2(n, r, f2, eng->seed);
    interp::Ledger ledger(n, r, eng->prime), ledger2(n, r, eng->prime2);
    if (ledger_path && *ledger_path && std::filesystem::exists(ledger_path)) {
      ledger = interp::Ledger::load(ledger_path);
      if (ledger.n() != n || ledger.r() != r || ledger.prime() != eng->prime)
        throw std::runtime_error("interp scan: ledger was built for different settings");
    }
    const auto sum = interp::scan_z_range(ring, pool, zmax, ledger);
    const auto sum2 = interp::scan_z_range(ring, pool2, zmax, ledger2);
    if (ledger_path && *ledger_path) ledger.save(ledger_path);
    json rep = base_report(eng, "interp scan");
    rep["spec"] = {{"n", n}, {"r", r}, {"zdeg_max", zmax}};
    json reps = json::array();
    for (const auto& scan : sum.reps_with_mingens) reps.push_back(scan_json(scan));
    rep["results"] = {{"degrees_scanned", sum.degrees_scanned},
                      {"orbit_reps", sum.orbit_reps},
                      {"total_mingens", sum.total_mingens},
                      {"two_prime_agreement", sum.total_mingens == sum2.total_mingens},
                      {"generators", std::move(reps)}};
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_interp_degree(isg_engine* eng, int n, int r, const int* e,
                             const int* f_, const char* ledger_path,
                             isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    if (!e || !f_) throw std::invalid_argument("interp degree: e and f are required");
    const interp::PhvRing ring(n);
    interp::GradedDegree d{std::vector<int>(e, e + n), std::vector<int>(f_, f_ + n)};
    int sum = 0;
    for (int v : d.e) sum += v;
    for (int v : d.f) sum += v;
    if (sum % 2)
      throw std::invalid_argument("interp degree: coordinate sum must be even");
    const PrimeField f(eng->prime), f2(eng->prime2);
    interp::SamplePool pool(n, r, f, eng->seed), pool2(n, r, f2, eng->seed);
    interp::Ledger ledger(n, r, eng->prime), ledger2(n, r, eng->prime2);
    if (ledger_path && *ledger_path && std::filesystem::exists(ledger_path)) {
      ledger = interp::Ledger::load(ledger_path);
      if (ledger.n() != n || ledger.r() != r || ledger.prime() != eng->prime)
        throw std::runtime_error("interp degree: ledger was built for different settings");
    }
    const auto scan = interp::ensure_scanned(ring, pool, d, ledger);
    const auto scan2 = interp::ensure_scanned(ring, pool2, d, ledger2);
    if (ledger_path && *ledger_path) ledger.save(ledger_path);
    json rep = base_report(eng, "interp degree");
    rep["spec"] = {{"n", n}, {"r", r}};
    json res = scan_json(scan);
    res["orbit_representative"] = interp::orbit_rep(d).str();
    res["two_prime_agreement"] = scan.relation_dim == scan2.relation_dim &&
                                 scan.mingen_count == scan2.mingen_count;
    rep["results"] = std::move(res);
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_interp_lift(isg_engine* eng, const char* ledger_path,
                           isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    if (!ledger_path || !*ledger_path)
      throw std::invalid_argument("interp lift: ledger path is required");
    interp::Ledger ledger = interp::Ledger::load(ledger_path);
    if (ledger.prime() != eng->prime)
      throw std::runtime_error(
          "interp lift: ledger prime differs from the configured prime");
    const interp::PhvRing ring(ledger.n());
    const PrimeField f(eng->prime), f2(eng->prime2);
    interp::SamplePool pool2(ledger.n(), ledger.r(), f2, eng->seed);
    int lifted = 0, verified = 0, failed = 0;
    interp::Ledger updated(ledger.n(), ledger.r(), ledger.prime());
    json items = json::array();
    for (const auto& [deg, scan] : ledger.entries()) {
      interp::DegreeScan copy = scan;
      if (!scan.mingens.empty()) {
        const auto basis = interp::enumerate_monomials(ring, deg);
        const auto lifts =
            interp::lift_relations(ring, basis, scan.mingens, f, pool2);
        copy.lifted.clear();
        for (const auto& lr : lifts) {
          lifted += lr.lifted;
          verified += lr.verified;
          failed += !lr.lifted || !lr.verified;
          if (lr.lifted) {
            copy.lifted.push_back(lr.poly.to_string());
            items.push_back({{"degree", deg.str()},
                             {"poly", lr.poly.to_string()},
                             {"verified", lr.verified}});
          } else {
            items.push_back({{"degree", deg.str()}, {"error", lr.note}});
          }
        }
      }
      updated.insert(std::move(copy));
    }
    updated.save(ledger_path);
    json rep = base_report(eng, "interp lift");
    rep["results"] = {{"lifted", lifted},
                      {"verified", verified},
                      {"failed", failed},
                      {"relations", std::move(items)}};
    return finish(std::move(rep), t0, out);
  });
}

isg_status isg_verify(isg_engine* eng, const char* suite, const char* opts_json,
                      isg_result** out) {
  return guarded(out, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    if (!suite) throw std::invalid_argument("verify: suite is required");
    verify::Options opt;
    opt.prime = eng->prime;
    opt.prime2 = eng->prime2;
    opt.seed = eng->seed;
    opt.trials = eng->trials;
    if (opts_json && *opts_json) {
      json extra = json::parse(opts_json);
      if (extra.contains("heavy")) opt.heavy = extra["heavy"].get<bool>();
      if (extra.contains("col")) {
        opt.col_k = extra["col"].at(0).get<int>();
        opt.col_n = extra["col"].at(1).get<int>();
      }
    }
    json rep = base_report(eng, std::string("verify ") + suite);
    json suites = json::array();
    bool pass = true;
    if (std::string(suite) == "all") {
      for (const auto& r : verify::run_all(opt)) {
        pass &= r.pass;
        suites.push_back(suite_json(r));
      }
    } else {
      const auto r = verify::run_suite(suite, opt);
      pass &= r.pass;
      suites.push_back(suite_json(r));
    }
    rep["results"] = {{"pass", pass}, {"suites", std::move(suites)}};
    return finish(std::move(rep), t0, out);
  });
}

}  // extern "C"
