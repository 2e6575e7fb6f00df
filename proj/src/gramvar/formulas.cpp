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

#include <stdexcept>

#include "gramvar/gramvar.hpp"

namespace isogram::gramvar {

algebra::BigInt binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  algebra::BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

namespace {

long long low_rank_dim(int k, int n, int r) {
  const long long l = r / 2;
  return (long long)n * (l * (k - l) + l * r - l * (l + 1) / 2) -
         (long long)r * (r - 1) / 2;
}

long long high_rank_dim(int k, int n, int r) {
  return (long long)n * ((long long)k * r - (long long)k * (k + 1) / 2) -
         (long long)r * (r - 1) / 2;
}

}  // namespace

long long dim_formula(const GramSpec& spec) {
  const int k = spec.k, n = spec.n, r = spec.r;
  if (r == 0) return 0;
  // the two branches agree on their overlap 2k-1 <= r <= 2k+2
  if (r >= 2 * k - 1 && r <= 2 * k + 2) {
    const long long a = low_rank_dim(k, n, r);
    const long long b = high_rank_dim(k, n, r);
    if (a != b) throw std::logic_error("dim_formula: branch mismatch on overlap");
    return a;
  }
  return r < 2 * k - 1 ? low_rank_dim(k, n, r) : high_rank_dim(k, n, r);
}

algebra::BigInt expected_degree(const GramSpec& spec) {
  if (spec.r < 2 * spec.k - 1)
    throw std::invalid_argument("expected_degree: requires r >= 2k-1");
  const long long m = spec.matrix_size();
  const long long r = spec.r;
  algebra::BigRational acc(1);
  for (long long j = 0; j <= m - r - 1; ++j) {
    acc *= algebra::BigRational(binom(m + j, m - r - j));
    acc /= algebra::BigRational(binom(2 * j + 1, j));
  }
  acc.canonicalize();
  if (acc.get_den() != 1)
    throw std::logic_error("expected_degree: product is not an integer");
  return acc.get_num();
}

algebra::BigInt component_count(const GramSpec& spec) {
  const int k = spec.k, n = spec.n, r = spec.r;
  if (r == 0) return 1;
  if (n == 2) return 1;  // a single block; rank-constrained matrix space
  if (k == 1) {
    if (r == 2) return (algebra::BigInt(1) << (n - 1)) - 1;
    return 1;
  }
  if (r % 2 == 1 || r > 2 * k) return 1;
  if (r == 2) return (algebra::BigInt(1) << (n - 1)) - 1;
  return algebra::BigInt(1) << (n - 1);
}

SegreData segre_component_data(int k, int n) {
  if (k < 1 || n < 3)
    throw std::invalid_argument("segre_component_data: need k >= 1, n >= 3");
  SegreData d;
  d.as_stated_total = 0;
  for (int i = 1; i <= n - 1; ++i) {
    SegreRow row;
    row.i = i;
    row.count = binom(n, i);
    row.degree = binom((long long)n * k - 2, (long long)i * k - 1);
    d.as_stated_total += row.count * row.degree;
    d.rows.push_back(std::move(row));
  }
  // each unordered bipartition {I, I^c} appears twice in the stated sum
  d.unordered_total = d.as_stated_total / 2;
  d.totals_disagree = d.as_stated_total != d.unordered_total;
  return d;
}

}  // namespace isogram::gramvar
