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

#include "interp/interp.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "algebra/fp_matrix.hpp"
#include "algebra/reconstruct.hpp"
#include "json.hpp"

namespace isogram::interp {

using json = nlohmann::json;

int GradedDegree::z() const {
  int s = 0;
  for (int v : e) s += v;
  for (int v : f) s += v;
  if (s % 2) throw std::logic_error("GradedDegree: odd coordinate sum");
  return s / 2;
}

bool GradedDegree::is_zero() const {
  for (int v : e) if (v) return false;
  for (int v : f) if (v) return false;
  return true;
}

bool GradedDegree::leq(const GradedDegree& o) const {
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i] || f[i] > o.f[i]) return false;
  return true;
}

GradedDegree GradedDegree::minus(const GradedDegree& o) const {
  GradedDegree d = *this;
  for (std::size_t i = 0; i < e.size(); ++i) {
    d.e[i] -= o.e[i];
    d.f[i] -= o.f[i];
    if (d.e[i] < 0 || d.f[i] < 0)
      throw std::invalid_argument("GradedDegree::minus: negative coordinate");
  }
  return d;
}

bool GradedDegree::operator<(const GradedDegree& o) const {
  int se = 0, so = 0;
  for (std::size_t i = 0; i < e.size(); ++i) { se += e[i] + f[i]; so += o.e[i] + o.f[i]; }
  if (se != so) return se < so;
  if (e != o.e) return e < o.e;
  return f < o.f;
}

std::string GradedDegree::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << "|";
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ")";
  return os.str();
}

// ---------------- PhvRing ----------------

PhvRing::PhvRing(int n) : layout_(n) {
  ring_ = algebra::PolyRing::make(layout_.names());
  const int N = layout_.count();
  degrees_.resize((std::size_t)N);
  info_.resize((std::size_t)N);
  auto deg = [n](std::initializer_list<std::pair<int, int>> es,
                 std::initializer_list<std::pair<int, int>> fs) {
    GradedDegree d{std::vector<int>((std::size_t)n, 0), std::vector<int>((std::size_t)n, 0)};
    for (auto [i, v] : es) d.e[(std::size_t)(i - 1)] += v;
    for (auto [i, v] : fs) d.f[(std::size_t)(i - 1)] += v;
    return d;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      degrees_[(std::size_t)layout_.pidx(i, j)] = deg({{i, 1}, {j, 1}}, {});
      info_[(std::size_t)layout_.pidx(i, j)] = {'P', i, j, 0};
      degrees_[(std::size_t)layout_.hidx(i, j)] =
          deg({{i, 1}, {j, 1}}, {{i, 1}, {j, 1}});
      info_[(std::size_t)layout_.hidx(i, j)] = {'H', i, j, 0};
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        if (j == i || k == i) continue;
        degrees_[(std::size_t)layout_.vidx(i, j, k)] = deg({{i, 1}}, {{i, 1}});
        info_[(std::size_t)layout_.vidx(i, j, k)] = {'V', i, j, k};
      }
}

std::pair<int, int> PhvRing::permute_var(int v, std::span<const int> perm) const {
  const VarInfo& in = info_[(std::size_t)v];
  auto img = [&](int t) { return perm[(std::size_t)(t - 1)] + 1; };
  if (in.type == 'P' || in.type == 'H') {
    int a = img(in.i), b = img(in.j);
    if (a > b) std::swap(a, b);
    return {in.type == 'P' ? layout_.pidx(a, b) : layout_.hidx(a, b), 1};
  }
  int a = img(in.i), b = img(in.j), c = img(in.k);
  int sign = 1;
  if (b > c) { std::swap(b, c); sign = -1; }
  return {layout_.vidx(a, b, c), sign};
}

// ---------------- enumeration ----------------

MonomialBasis enumerate_monomials(const PhvRing& ring, const GradedDegree& d) {
  if ((int)d.e.size() != ring.n())
    throw std::invalid_argument("enumerate_monomials: wrong degree length");
  for (int v : d.e)
    if (v < 0) throw std::invalid_argument("enumerate_monomials: negative degree");
  for (int v : d.f)
    if (v < 0) throw std::invalid_argument("enumerate_monomials: negative degree");
  const int N = ring.var_count();
  const int n = ring.n();
  MonomialBasis out;
  out.degree = d;
  ExpVec cur((std::size_t)N, 0);
  GradedDegree rem = d;

  std::function<void(int)> dfs = [&](int v) {
    if (v == N) {
      if (rem.is_zero()) out.monomials.push_back(cur);
      return;
    }
    const GradedDegree& vd = ring.var_degree(v);
    int mx = INT32_MAX;
    for (int i = 0; i < n; ++i) {
      if (vd.e[(std::size_t)i])
        mx = std::min(mx, rem.e[(std::size_t)i] / vd.e[(std::size_t)i]);
      if (vd.f[(std::size_t)i])
        mx = std::min(mx, rem.f[(std::size_t)i] / vd.f[(std::size_t)i]);
    }
    for (int t = 0; t <= mx; ++t) {
      if (t) {
        for (int i = 0; i < n; ++i) {
          rem.e[(std::size_t)i] -= vd.e[(std::size_t)i];
          rem.f[(std::size_t)i] -= vd.f[(std::size_t)i];
        }
        cur[(std::size_t)v] = (std::uint16_t)t;
      }
      dfs(v + 1);
    }
    for (int i = 0; i < n; ++i) {
      rem.e[(std::size_t)i] += mx * vd.e[(std::size_t)i];
      rem.f[(std::size_t)i] += mx * vd.f[(std::size_t)i];
    }
    cur[(std::size_t)v] = 0;
  };
  dfs(0);
  return out;
}

long long count_monomials_bruteforce(const PhvRing& ring, const GradedDegree& d) {
  // independent route: accumulate a degree -> count table variable by
  // variable instead of enumerating exponent vectors
  std::map<GradedDegree, long long> table;
  GradedDegree zero{std::vector<int>((std::size_t)ring.n(), 0),
                    std::vector<int>((std::size_t)ring.n(), 0)};
  table[zero] = 1;
  const int n = ring.n();
  for (int v = 0; v < ring.var_count(); ++v) {
    const GradedDegree& vd = ring.var_degree(v);
    std::map<GradedDegree, long long> next;
    for (const auto& [deg, cnt] : table) {
      GradedDegree cur = deg;
      for (int t = 0;; ++t) {
        if (cur.leq(d)) next[cur] += cnt;
        else break;
        bool fits = true;
        for (int i = 0; i < n; ++i) {
          cur.e[(std::size_t)i] += vd.e[(std::size_t)i];
          cur.f[(std::size_t)i] += vd.f[(std::size_t)i];
          fits &= cur.e[(std::size_t)i] <= d.e[(std::size_t)i] &&
                  cur.f[(std::size_t)i] <= d.f[(std::size_t)i];
        }
        if (!fits) break;
      }
    }
    table = std::move(next);
  }
  auto it = table.find(d);
  return it == table.end() ? 0 : it->second;
}

std::vector<GradedDegree> achievable_subdegrees(const PhvRing& ring,
                                                const GradedDegree& cap) {
  std::set<GradedDegree> seen;
  GradedDegree zero{std::vector<int>((std::size_t)ring.n(), 0),
                    std::vector<int>((std::size_t)ring.n(), 0)};
  seen.insert(zero);
  for (int v = 0; v < ring.var_count(); ++v) {
    const GradedDegree& vd = ring.var_degree(v);
    std::vector<GradedDegree> grow(seen.begin(), seen.end());
    for (const auto& base : grow) {
      GradedDegree cur = base;
      for (;;) {
        bool ok = true;
        for (int i = 0; i < ring.n(); ++i) {
          cur.e[(std::size_t)i] += vd.e[(std::size_t)i];
          cur.f[(std::size_t)i] += vd.f[(std::size_t)i];
        }
        for (int i = 0; i < ring.n(); ++i)
          ok &= cur.e[(std::size_t)i] <= cap.e[(std::size_t)i] &&
                cur.f[(std::size_t)i] <= cap.f[(std::size_t)i];
        if (!ok) break;
        if (!seen.insert(cur).second) { /* keep extending: higher powers may be new */ }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<GradedDegree> achievable_degrees_z(const PhvRing& ring, int zmax) {
  GradedDegree cap{std::vector<int>((std::size_t)ring.n(), zmax),
                   std::vector<int>((std::size_t)ring.n(), zmax)};
  std::vector<GradedDegree> out;
  for (auto& d : achievable_subdegrees(ring, cap)) {
    const int z = d.z();
    if (z >= 1 && z <= zmax) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GradedDegree apply_perm(const GradedDegree& d, std::span<const int> perm) {
  GradedDegree out = d;
  for (std::size_t i = 0; i < d.e.size(); ++i) {
    out.e[(std::size_t)perm[i]] = d.e[i];
    out.f[(std::size_t)perm[i]] = d.f[i];
  }
  return out;
}

namespace {
std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p((std::size_t)n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}
}  // namespace

GradedDegree orbit_rep(const GradedDegree& d) {
  GradedDegree best = d;
  for (const auto& p : all_perms(d.n())) {
    GradedDegree cand = apply_perm(d, p);
    std::pair<std::vector<int>, std::vector<int>> key{cand.e, cand.f};
    std::pair<std::vector<int>, std::vector<int>> bk{best.e, best.f};
    if (key < bk) best = std::move(cand);
  }
  return best;
}

std::vector<GradedDegree> orbit_expand(const GradedDegree& d) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  std::vector<GradedDegree> out;
  for (const auto& p : all_perms(d.n())) {
    GradedDegree cand = apply_perm(d, p);
    if (seen.insert({cand.e, cand.f}).second) out.push_back(std::move(cand));
  }
  return out;
}

// ---------------- sample pool ----------------

SamplePool::SamplePool(int n, int r, const PrimeField& f, u64 seed)
    : n_(n),
      r_(r),
      field_(f),
      main_(seed, algebra::streams::kInterpPool ^ f.modulus() ^ (u64)r),
      hold_(seed, algebra::streams::kHoldout ^ f.modulus() ^ (u64)r) {
  if (r != 4 && r != 5)
    throw std::invalid_argument("SamplePool: parametrizations exist for r = 4, 5");
}

std::vector<u64> SamplePool::draw(CounterRng& rng) {
  for (;;) {
    std::optional<paramzoo::PHVPoint> pt;
    if (r_ == 5) {
      auto cfg = paramzoo::NullConeConfig::random(n_, field_, rng);
      pt = paramzoo::invariants_from_gram(
          paramzoo::gram_from_pw(paramzoo::nullcone_point(cfg, field_), field_), n_,
          field_);
    } else {
      auto cfg = paramzoo::SpinorConfig::random(n_, field_, rng);
      auto sp = paramzoo::spinor_point(cfg, field_);
      if (sp) pt = std::move(sp->phv);
    }
    if (pt) return std::move(pt->values);
  }
}

const std::vector<u64>& SamplePool::sample(std::size_t i) {
  while (samples_.size() <= i) samples_.push_back(draw(main_));
  return samples_[i];
}

const std::vector<u64>& SamplePool::holdout(std::size_t i) {
  while (holdouts_.size() <= i) holdouts_.push_back(draw(hold_));
  return holdouts_[i];
}

// ---------------- relation spaces ----------------

namespace {

/// Incremental echelon form: rank after each inserted row for free.
class EchelonAccumulator {
 public:
  EchelonAccumulator(std::size_t cols, const PrimeField& f) : cols_(cols), f_(f) {}

  bool insert(std::vector<u64> row) {
    for (auto& [pc, r] : rows_) {
      const u64 c = row[pc];
      if (!c) continue;
      for (std::size_t j = pc; j < cols_; ++j)
        row[j] = f_.sub(row[j], f_.mul(c, r[j]));
    }
    std::size_t lead = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (row[j]) { lead = j; break; }
    if (lead == cols_) return false;
    const u64 inv = f_.inv(row[lead]);
    for (std::size_t j = lead; j < cols_; ++j) row[j] = f_.mul(row[j], inv);
    rows_.emplace(lead, std::move(row));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  algebra::FpMatrix matrix() const {
    algebra::FpMatrix m(rows_.size(), cols_);
    std::size_t i = 0;
    for (const auto& [pc, r] : rows_) {
      for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = r[j];
      ++i;
    }
    return m;
  }

 private:
  std::size_t cols_;
  PrimeField f_;
  std::map<std::size_t, std::vector<u64>> rows_;  // pivot col -> row
};

struct MonomialSupport {
  std::vector<std::pair<int, int>> factors;  // (variable, exponent)
};

std::vector<MonomialSupport> supports_of(const MonomialBasis& b) {
  std::vector<MonomialSupport> out;
  out.reserve(b.monomials.size());
  for (const auto& m : b.monomials) {
    MonomialSupport s;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v]) s.factors.emplace_back((int)v, (int)m[v]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<u64> eval_row(const std::vector<MonomialSupport>& sup,
                          std::span<const u64> values, const PrimeField& f) {
  std::vector<u64> row(sup.size());
  for (std::size_t j = 0; j < sup.size(); ++j) {
    u64 v = 1;
    for (auto [var, exp] : sup[j].factors)
      v = f.mul(v, f.pow(values[(std::size_t)var], (u64)exp));
    row[j] = v;
  }
  return row;
}

}  // namespace

RelationSpace relation_space(const PhvRing& ring, SamplePool& pool,
                             const GradedDegree& d, const ScanOptions& opt) {
  RelationSpace out;
  out.basis = enumerate_monomials(ring, d);
  const std::size_t m = out.basis.monomials.size();
  if (m == 0) {
    out.stabilized = true;
    return out;
  }
  const PrimeField& f = pool.field();
  const auto sup = supports_of(out.basis);
  EchelonAccumulator acc(m, f);
  std::size_t used = 0;
  auto feed = [&](std::size_t count) {
    for (std::size_t t = 0; t < count; ++t) {
      acc.insert(eval_row(sup, pool.sample(used), f));
      ++used;
    }
  };
  feed(m + (std::size_t)opt.extra_samples);
  std::size_t rank = acc.rank();
  bool stable = false;
  for (int round = 0; round < opt.max_restarts && !stable; ++round) {
    feed((std::size_t)opt.stabilize_rows);
    stable = acc.rank() == rank;
    rank = acc.rank();
  }
  if (!stable)
    throw std::runtime_error("relation_space: rank did not stabilize at degree " +
                             d.str() + "; increase the sample budget");
  out.samples_used = (int)used;
  out.stabilized = true;
  algebra::FpMatrix echelon = acc.matrix();
  out.kernel = echelon.nullspace(f);
  return out;
}

// ---------------- ledger ----------------

const DegreeScan* Ledger::find(const GradedDegree& d) const {
  auto it = entries_.find(d);
  return it == entries_.end() ? nullptr : &it->second;
}

void Ledger::insert(DegreeScan scan) {
  entries_[scan.degree] = std::move(scan);
}

namespace {

json scan_to_json(const DegreeScan& s) {
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
  rec["canonicalized"] = s.canonicalized;
  json basis = json::array();
  for (const auto& v : s.mingens) {
    json sparse = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) sparse.push_back({(int)i, std::to_string(v[i])});
    basis.push_back(std::move(sparse));
  }
  rec["basis"] = std::move(basis);
  if (!s.lifted.empty()) rec["lifted"] = s.lifted;
  return rec;
}

DegreeScan scan_from_json(const json& rec, int monomial_count_hint) {
  DegreeScan s;
  s.degree.e = rec.at("e").get<std::vector<int>>();
  s.degree.f = rec.at("f").get<std::vector<int>>();
  s.monomial_count = rec.at("monomials").get<int>();
  s.relation_dim = rec.at("relation_dim").get<int>();
  s.lower_ideal_dim = rec.at("lower_dim").get<int>();
  s.mingen_count = rec.at("mingens").get<int>();
  s.orbit_size = rec.at("orbit").get<int>();
  s.samples_used = rec.at("samples").get<int>();
  s.prime = std::stoull(rec.at("prime").get<std::string>());
  s.canonicalized = rec.value("canonicalized", false);
  (void)monomial_count_hint;
  for (const auto& sparse : rec.at("basis")) {
    std::vector<u64> v((std::size_t)s.monomial_count, 0);
    for (const auto& pair : sparse)
      v[(std::size_t)pair.at(0).get<int>()] =
          std::stoull(pair.at(1).get<std::string>());
    s.mingens.push_back(std::move(v));
  }
  if (rec.contains("lifted")) s.lifted = rec.at("lifted").get<std::vector<std::string>>();
  return s;
}

}  // namespace

void Ledger::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("Ledger::save: cannot open " + path);
  json head;
  head["schema"] = "ledger/1";
  head["n"] = n_;
  head["r"] = r_;
  head["prime"] = std::to_string(prime_);
  out << head.dump() << "\n";
  for (const auto& [d, s] : entries_) out << scan_to_json(s).dump() << "\n";
}

Ledger Ledger::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Ledger::load: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("Ledger::load: empty file");
  json head = json::parse(line);
  if (head.value("schema", "") != "ledger/1")
    throw std::runtime_error("Ledger::load: unknown schema");
  Ledger led(head.at("n").get<int>(), head.at("r").get<int>(),
             std::stoull(head.at("prime").get<std::string>()));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    led.insert(scan_from_json(json::parse(line), 0));
  }
  return led;
}

// ---------------- mingens ----------------

namespace {

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) { h ^= x; h *= 1099511628211ULL; }
    return h;
  }
};

/// Divisor degrees d' (with achievable complement) for a target degree.
std::vector<GradedDegree> divisor_degrees(const PhvRing& ring, const GradedDegree& d) {
  auto subs = achievable_subdegrees(ring, d);
  std::set<GradedDegree> achievable(subs.begin(), subs.end());
  std::vector<GradedDegree> out;
  for (const auto& q : subs) {
    if (q.is_zero()) continue;
    GradedDegree rest = d.minus(q);
    if (rest.is_zero()) continue;
    if (!achievable.count(rest)) continue;
    // q is the monomial multiplier; rest hosts the generator
    out.push_back(rest);
  }
  std::set<GradedDegree> dedup(out.begin(), out.end());
  return {dedup.begin(), dedup.end()};
}

void validate_on_holdout(const PhvRing& ring, SamplePool& pool,
                         const MonomialBasis& basis,
                         const std::vector<std::vector<u64>>& vecs, int points) {
  const PrimeField& f = pool.field();
  const auto sup = supports_of(basis);
  for (int t = 0; t < points; ++t) {
    const auto row = eval_row(sup, pool.holdout((std::size_t)t), f);
    for (const auto& v : vecs) {
      u64 acc = 0;
      for (std::size_t j = 0; j < row.size(); ++j)
        if (v[j]) acc = f.add(acc, f.mul(v[j], row[j]));
      if (acc != 0)
        throw std::runtime_error("holdout validation failed at degree " +
                                 basis.degree.str());
    }
  }
}

}  // namespace

DegreeScan mingen_count(const PhvRing& ring, SamplePool& pool, const GradedDegree& d,
                        Ledger& ledger, const ScanOptions& opt) {
  const PrimeField& f = pool.field();
  RelationSpace rel = relation_space(ring, pool, d, opt);
  DegreeScan scan;
  scan.degree = d;
  scan.monomial_count = (int)rel.basis.monomials.size();
  scan.relation_dim = (int)rel.kernel.size();
  scan.orbit_size = (int)orbit_expand(d).size();
  scan.samples_used = rel.samples_used;
  scan.prime = f.modulus();
  if (scan.relation_dim == 0) return scan;

  // index of each monomial of the target basis
  std::unordered_map<ExpVec, int, ExpVecHash> index;
  for (std::size_t i = 0; i < rel.basis.monomials.size(); ++i)
    index.emplace(rel.basis.monomials[i], (int)i);

  EchelonAccumulator lower(rel.basis.monomials.size(), f);
  for (const GradedDegree& dg : divisor_degrees(ring, d)) {
    const DegreeScan* g = ledger.find(dg);
    if (!g)
      throw std::runtime_error("mingen_count: ledger missing divisor degree " +
                               dg.str() + " (scan lower degrees first)");
    if (g->mingens.empty()) continue;
    const MonomialBasis gb = enumerate_monomials(ring, dg);
    const MonomialBasis qb = enumerate_monomials(ring, d.minus(dg));
    for (const auto& gen : g->mingens) {
      for (const auto& q : qb.monomials) {
        std::vector<u64> prod(rel.basis.monomials.size(), 0);
        for (std::size_t t = 0; t < gb.monomials.size(); ++t) {
          if (!gen[t]) continue;
          ExpVec e = gb.monomials[t];
          for (std::size_t v = 0; v < e.size(); ++v) e[v] = (std::uint16_t)(e[v] + q[v]);
          auto it = index.find(e);
          if (it == index.end())
            throw std::logic_error("mingen_count: product monomial outside basis");
          prod[(std::size_t)it->second] = f.add(prod[(std::size_t)it->second], gen[t]);
        }
        lower.insert(std::move(prod));
      }
    }
  }
  scan.lower_ideal_dim = (int)lower.rank();
  scan.mingen_count = scan.relation_dim - scan.lower_ideal_dim;
  if (scan.mingen_count < 0)
    throw std::logic_error("mingen_count: lower span exceeds the relation space");

  // complement basis: kernel vectors that extend the lower span
  for (const auto& v : rel.kernel) {
    const std::size_t before = lower.rank();
    lower.insert(v);
    if (lower.rank() > before) scan.mingens.push_back(v);
  }
  if ((int)scan.mingens.size() != scan.mingen_count)
    throw std::logic_error("mingen_count: complement extraction mismatch");
  if (!scan.mingens.empty())
    validate_on_holdout(ring, pool, rel.basis, scan.mingens, opt.holdout_points);
  return scan;
}

DegreeScan ensure_scanned(const PhvRing& ring, SamplePool& pool,
                          const GradedDegree& d, Ledger& ledger,
                          const ScanOptions& opt) {
  if (const DegreeScan* hit = ledger.find(d)) return *hit;
  for (const GradedDegree& dg : divisor_degrees(ring, d))
    if (!ledger.has(dg)) ensure_scanned(ring, pool, dg, ledger, opt);
  DegreeScan scan = mingen_count(ring, pool, d, ledger, opt);
  // store the whole orbit: relabeled generators stay generators
  const MonomialBasis basis = enumerate_monomials(ring, d);
  for (const auto& perm : all_perms(ring.n())) {
    GradedDegree img = apply_perm(d, perm);
    if (ledger.has(img)) continue;
    DegreeScan copy = scan;
    copy.degree = img;
    copy.canonicalized = !(img == d);
    if (!(img == d) && !scan.mingens.empty()) {
      const MonomialBasis target = enumerate_monomials(ring, img);
      std::unordered_map<ExpVec, int, ExpVecHash> index;
      for (std::size_t i = 0; i < target.monomials.size(); ++i)
        index.emplace(target.monomials[i], (int)i);
      copy.mingens.clear();
      const PrimeField& f = pool.field();
      for (const auto& gen : scan.mingens) {
        std::vector<u64> out(target.monomials.size(), 0);
        for (std::size_t t = 0; t < basis.monomials.size(); ++t) {
          if (!gen[t]) continue;
          ExpVec e((std::size_t)ring.var_count(), 0);
          int sign = 1;
          for (std::size_t v = 0; v < basis.monomials[t].size(); ++v) {
            const int exp = basis.monomials[t][v];
            if (!exp) continue;
            auto [nv, s] = ring.permute_var((int)v, perm);
            e[(std::size_t)nv] = (std::uint16_t)(e[(std::size_t)nv] + exp);
            if (s < 0 && exp % 2) sign = -sign;
          }
          auto it = index.find(e);
          if (it == index.end())
            throw std::logic_error("ensure_scanned: relabeled monomial missing");
          out[(std::size_t)it->second] = sign > 0 ? gen[t] : f.neg(gen[t]);
        }
        copy.mingens.push_back(std::move(out));
      }
    } else if (!(img == d)) {
      copy.mingens.clear();
    }
    ledger.insert(std::move(copy));
  }
  return *ledger.find(d);
}

ZScanSummary scan_z_range(const PhvRing& ring, SamplePool& pool, int zmax,
                          Ledger& ledger, const ScanOptions& opt) {
  ZScanSummary sum;
  auto degrees = achievable_degrees_z(ring, zmax);
  sum.degrees_scanned = (int)degrees.size();
  std::set<GradedDegree> reps;
  for (const auto& d : degrees) reps.insert(orbit_rep(d));
  sum.orbit_reps = (int)reps.size();
  for (const auto& rep : reps) {   // std::set iterates in (z, lex) order
    DegreeScan scan = ensure_scanned(ring, pool, rep, ledger, opt);
    if (scan.mingen_count > 0) {
      sum.total_mingens += (long long)scan.mingen_count * scan.orbit_size;
      sum.reps_with_mingens.push_back(scan);
    }
  }
  return sum;
}

// ---------------- lifting ----------------

std::vector<LiftedRelation> lift_relations(
    const PhvRing& ring, const MonomialBasis& basis,
    const std::vector<std::vector<u64>>& kernel, const PrimeField& f,
    SamplePool& second_pool, int check_points, bool small_multiplier) {
  std::vector<LiftedRelation> out;
  const auto sup = supports_of(basis);
  const PrimeField& f2 = second_pool.field();
  for (const auto& vec : kernel) {
    LiftedRelation lr{QPoly::zero(ring.poly_ring()), false, false, ""};
    std::vector<algebra::BigRational> coeffs(vec.size());
    bool ok = true;
    if (small_multiplier) {
      algebra::BigInt p((unsigned long)0);
      {
        u64 m = f.modulus();
        mpz_import(p.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
      }
      auto lifted = algebra::small_multiplier_lift(vec, f, p / 2);
      if (!lifted) {
        ok = false;
        lr.note = "small-multiplier search failed";
      } else {
        for (std::size_t i = 0; i < vec.size(); ++i)
          coeffs[i] = algebra::BigRational((*lifted)[i]);
      }
    } else {
      for (std::size_t i = 0; i < vec.size() && ok; ++i) {
        if (!vec[i]) continue;
        auto q = algebra::rational_reconstruct(vec[i], f);
        if (!q) {
          ok = false;
          lr.note = "rational reconstruction failed at coefficient " +
                    std::to_string(i);
        } else {
          coeffs[i] = *q;
        }
      }
    }
    if (ok) {
      // clear denominators
      algebra::BigInt l = 1;
      for (const auto& c : coeffs)
        if (c != 0) l = lcm(l, c.get_den());
      algebra::BigInt g = 0;
      for (auto& c : coeffs) {
        c *= algebra::BigRational(l);
        c.canonicalize();
        if (c != 0) {
          if (g == 0) g = abs(c.get_num());
          else g = gcd(g, c.get_num());
        }
      }
      if (g > 1)
        for (auto& c : coeffs) { c /= algebra::BigRational(g); c.canonicalize(); }
      QPoly p = QPoly::zero(ring.poly_ring());
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        algebra::Monomial m{std::vector<std::uint32_t>(
            basis.monomials[i].begin(), basis.monomials[i].end())};
        p.add_term(m, coeffs[i]);
      }
      lr.poly = std::move(p);
      lr.lifted = true;
      // revalidate over the second prime
      bool vanish = true;
      for (int t = 0; t < check_points && vanish; ++t) {
        const auto& vals = second_pool.sample((std::size_t)t);
        u64 acc = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          if (coeffs[i] == 0) continue;
          u64 cv = algebra::reduce_mpq(coeffs[i], f2);
          u64 mv = 1;
          for (auto [var, exp] : sup[i].factors)
            mv = f2.mul(mv, f2.pow(vals[(std::size_t)var], (u64)exp));
          acc = f2.add(acc, f2.mul(cv, mv));
        }
        vanish = acc == 0;
      }
      lr.verified = vanish;
      if (!vanish) lr.note = "lift did not vanish over the second prime";
    }
    out.push_back(std::move(lr));
  }
  return out;
}

u64 eval_phv_poly(const PhvRing& ring, const Poly& p, std::span<const u64> values,
                  const PrimeField& f) {
  (void)ring;
  return p.eval_mod(f, values);
}

bool vanish_check(const PhvRing& ring, const Poly& fixture, SamplePool& pool,
                  int trials) {
  const PrimeField& f = pool.field();
  for (int t = 0; t < trials; ++t)
    if (eval_phv_poly(ring, fixture, pool.sample((std::size_t)t), f) != 0)
      return false;
  return true;
}

}  // namespace isogram::interp
