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

#include <algorithm>
#include <stdexcept>

namespace isogram::gramvar {

GramSpec::GramSpec(int k_, int n_, int r_) : k(k_), n(n_), r(r_) {
  if (k < 1) throw std::invalid_argument("GramSpec: k must be >= 1");
  if (n < 2) throw std::invalid_argument("GramSpec: n must be >= 2");
  if (r < 0 || r > k * n)
    throw std::invalid_argument("GramSpec: r must lie in [0, kn]");
}

long long variable_count(int k, int n) {
  GramSpec check(k, n, 0);
  long long kn = (long long)k * n;
  return kn * (kn + 1) / 2 - (long long)n * k * (k + 1) / 2;
}

long long invariant_count(int n) {
  if (n < 3) throw std::invalid_argument("invariant_count: n must be >= 3");
  return (long long)n * n * (n - 1) / 2;
}

namespace {

std::string entry_name(int i, int j) {
  // 1-based pair; two-digit style for single-digit indices, underscore
  // separator once an index needs two digits.
  if (i <= 9 && j <= 9) return "x" + std::to_string(i) + std::to_string(j);
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

SymbolicMatrix SymbolicMatrix::block_zero(int k, int n) {
  GramSpec check(k, n, 0);
  SymbolicMatrix x;
  x.m_ = k * n;
  x.k_ = k;
  x.ent_.assign((std::size_t)x.m_ * x.m_, -1);
  std::vector<std::string> names;
  int next = 0;
  for (int i = 0; i < x.m_; ++i) {
    for (int j = i + 1; j < x.m_; ++j) {
      if (i / k == j / k) continue;
      names.push_back(entry_name(i + 1, j + 1));
      x.ent_[(std::size_t)i * x.m_ + j] = next;
      x.ent_[(std::size_t)j * x.m_ + i] = next;
      ++next;
    }
  }
  x.ring_ = algebra::PolyRing::make(std::move(names));
  return x;
}

SymbolicMatrix SymbolicMatrix::generic(int m) {
  if (m < 1) throw std::invalid_argument("SymbolicMatrix::generic: m must be >= 1");
  SymbolicMatrix x;
  x.m_ = m;
  x.k_ = 0;
  x.ent_.assign((std::size_t)m * m, -1);
  std::vector<std::string> names;
  int next = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      names.push_back(entry_name(i + 1, j + 1));
      x.ent_[(std::size_t)i * m + j] = next;
      x.ent_[(std::size_t)j * m + i] = next;
      ++next;
    }
  }
  x.ring_ = algebra::PolyRing::make(std::move(names));
  return x;
}

Poly SymbolicMatrix::minor_kept(std::span<const int> rows,
                                std::span<const int> cols) const {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor: row/column counts differ");
  for (int r : rows)
    if (r < 0 || r >= m_) throw std::out_of_range("minor: row index out of range");
  for (int c : cols)
    if (c < 0 || c >= m_) throw std::out_of_range("minor: column index out of range");

  // memoized cofactor expansion keyed by (row set, column set)
  struct Rec {
    const SymbolicMatrix& x;
    Poly run(std::vector<int> rs, std::vector<int> cs) {
      if (rs.empty()) return Poly::constant(x.ring_, 1);
      auto key = std::make_pair(rs, cs);
      {
        std::lock_guard<std::mutex> lock(x.memo_->mu);
        auto it = x.memo_->map.find(key);
        if (it != x.memo_->map.end()) return it->second;
      }
      Poly acc = Poly::zero(x.ring_);
      const int r0 = rs.front();
      std::vector<int> rrest(rs.begin() + 1, rs.end());
      long long sign = 1;
      for (std::size_t t = 0; t < cs.size(); ++t) {
        const int v = x.entry(r0, cs[t]);
        if (v >= 0) {
          std::vector<int> crest;
          crest.reserve(cs.size() - 1);
          for (std::size_t s = 0; s < cs.size(); ++s)
            if (s != t) crest.push_back(cs[s]);
          Poly sub = run(rrest, crest);
          Poly term = sub * Poly::variable(x.ring_, (std::size_t)v);
          acc += term.scale(sign);
        }
        sign = -sign;
      }
      std::lock_guard<std::mutex> lock(x.memo_->mu);
      x.memo_->map.emplace(std::move(key), acc);
      return acc;
    }
  } rec{*this};
  return rec.run(std::vector<int>(rows.begin(), rows.end()),
                 std::vector<int>(cols.begin(), cols.end()));
}

Poly SymbolicMatrix::minor_deleted(std::span<const int> drows,
                                   std::span<const int> dcols) const {
  std::vector<int> rows, cols;
  auto keep = [this](std::span<const int> del, std::vector<int>& out) {
    std::vector<bool> drop((std::size_t)m_, false);
    for (int d : del) {
      if (d < 0 || d >= m_) throw std::out_of_range("minor: index out of range");
      if (drop[(std::size_t)d])
        throw std::invalid_argument("minor: repeated deletion index");
      drop[(std::size_t)d] = true;
    }
    for (int i = 0; i < m_; ++i)
      if (!drop[(std::size_t)i]) out.push_back(i);
  };
  keep(drows, rows);
  keep(dcols, cols);
  return minor_kept(rows, cols);
}

FpMatrix SymbolicMatrix::random_point(const PrimeField& f,
                                      algebra::CounterRng& rng) const {
  FpMatrix x((std::size_t)m_, (std::size_t)m_);
  for (int i = 0; i < m_; ++i)
    for (int j = i; j < m_; ++j) {
      if (entry(i, j) < 0) continue;
      u64 v = f.random(rng);
      x.at((std::size_t)i, (std::size_t)j) = v;
      x.at((std::size_t)j, (std::size_t)i) = v;
    }
  return x;
}

u64 SymbolicMatrix::point_minor(const FpMatrix& x, std::span<const int> rows,
                                std::span<const int> cols, const PrimeField& f) {
  const std::size_t s = rows.size();
  FpMatrix sub(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      sub.at(i, j) = x.at((std::size_t)rows[i], (std::size_t)cols[j]);
  return sub.det(f);
}

namespace {

std::vector<std::vector<int>> combinations(int m, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == m - size + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<std::pair<MinorId, Poly>> all_minors(const SymbolicMatrix& x, int size) {
  if (size < 1 || size > x.size())
    throw std::invalid_argument("all_minors: size out of range");
  const int m = x.size();
  const auto kept = combinations(m, size);
  std::vector<std::pair<MinorId, Poly>> out;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a; b < kept.size(); ++b) {
      // canonical representative of the unordered pair {rows, cols}
      std::vector<int> drows, dcols;
      auto deleted = [m](const std::vector<int>& keep) {
        std::vector<int> del;
        std::size_t t = 0;
        for (int i = 0; i < m; ++i) {
          if (t < keep.size() && keep[t] == i) { ++t; continue; }
          del.push_back(i);
        }
        return del;
      };
      out.push_back({MinorId{deleted(kept[a]), deleted(kept[b])},
                     x.minor_kept(kept[a], kept[b])});
    }
  }
  return out;
}

algebra::BigInt all_minors_count(int m, int size) {
  algebra::BigInt c = binom(m, size);
  return (c * c + c) / 2;
}

namespace {

int sort_sign(std::vector<int>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) { std::swap(v[i], v[j]); s = -s; }
  return s;
}

Poly plucker_sum(const SymbolicMatrix& x, std::span<const int> I,
                 std::span<const int> J, int size, int flip) {
  if ((int)I.size() != size - 1 || (int)J.size() != size + 1)
    throw std::invalid_argument("plucker_check: |I| must be size-1, |J| size+1");
  for (std::size_t i = 1; i < J.size(); ++i)
    if (J[i] <= J[i - 1])
      throw std::invalid_argument("plucker_check: J must be strictly increasing");
  Poly acc = Poly::zero(x.ring());
  for (int l = 1; l <= (int)J.size(); ++l) {
    const int jl = J[(std::size_t)l - 1];
    std::vector<int> rows(I.begin(), I.end());
    rows.push_back(jl);
    // repeated index: determinant with a repeated row vanishes
    bool repeated = false;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (rows[i] == rows[j]) repeated = true;
    if (repeated) continue;
    int sgn = sort_sign(rows);
    std::vector<int> cols;
    for (int c : J)
      if (c != jl) cols.push_back(c);
    Poly term = x.minor_kept(rows, cols);
    long long coef = (l % 2 ? -1 : 1) * sgn;
    if (l == flip) coef = -coef;
    acc += term.scale(coef);
  }
  return acc;
}

}  // namespace

bool plucker_check(const SymbolicMatrix& x, std::span<const int> I,
                   std::span<const int> J, int size) {
  return plucker_sum(x, I, J, size, 0).is_zero();
}

bool plucker_check_broken(const SymbolicMatrix& x, std::span<const int> I,
                          std::span<const int> J, int size, int flip) {
  return plucker_sum(x, I, J, size, flip).is_zero();
}

SpanResult minor_span_dimension(const SymbolicMatrix& x, int size,
                                const PrimeField& f, u64 seed, int margin) {
  const int m = x.size();
  const auto kept = combinations(m, size);
  std::vector<std::pair<int, int>> pairs;  // indices into `kept`
  for (std::size_t a = 0; a < kept.size(); ++a)
    for (std::size_t b = a; b < kept.size(); ++b)
      pairs.emplace_back((int)a, (int)b);

  const std::size_t cols = pairs.size();
  const std::size_t rows = cols + (std::size_t)margin;
  algebra::CounterRng rng(seed, algebra::streams::kSpanPoints ^ f.modulus());
  FpMatrix eval(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    FpMatrix pt = x.random_point(f, rng);
    for (std::size_t j = 0; j < cols; ++j)
      eval.at(i, j) = SymbolicMatrix::point_minor(pt, kept[(std::size_t)pairs[j].first],
                                                  kept[(std::size_t)pairs[j].second], f);
  }
  // stabilization: the last margin/2 rows must not raise the rank
  FpMatrix head(rows - (std::size_t)margin / 2, cols);
  for (std::size_t i = 0; i < head.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) head.at(i, j) = eval.at(i, j);
  const std::size_t rank_head = head.rank(f);
  const std::size_t rank_full = eval.rank(f);
  SpanResult res;
  res.minors = (int)cols;
  res.dimension = (int)rank_full;
  res.samples_used = (int)rows;
  res.stabilized = rank_head == rank_full;
  if (!res.stabilized)
    throw std::runtime_error(
        "minor_span_dimension: rank did not stabilize; rerun with more samples");
  return res;
}

}  // namespace isogram::gramvar
