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

#ifndef ISOGRAM_GRAMVAR_HPP
#define ISOGRAM_GRAMVAR_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra/fp_matrix.hpp"
#include "algebra/poly.hpp"
#include "algebra/rng.hpp"

namespace isogram::gramvar {

using algebra::FpMatrix;
using algebra::Poly;
using algebra::PrimeField;
using algebra::u64;

/// Block parameters: n blocks of size k, rank bound r.
struct GramSpec {
  int k = 1, n = 2, r = 0;

  GramSpec(int k_, int n_, int r_);
  int matrix_size() const { return k * n; }
};

long long variable_count(int k, int n);
long long invariant_count(int n);  // n >= 3

/// Symmetric matrix whose entries are ring variables or structural zeros.
/// Covers both the block-zero shape and the fully generic symmetric matrix.
class SymbolicMatrix {
 public:
  /// kn x kn, zero k x k diagonal blocks, variables x_{ij} elsewhere.
  static SymbolicMatrix block_zero(int k, int n);
  /// m x m with all entries (diagonal included) distinct variables.
  static SymbolicMatrix generic(int m);

  int size() const { return m_; }
  const algebra::PolyRing::Ptr& ring() const { return ring_; }
  /// Variable index of entry (i, j), 0-based; -1 for a structural zero.
  int entry(int i, int j) const { return ent_[(std::size_t)i * m_ + j]; }
  bool is_block_zero() const { return k_ > 0; }
  int block() const { return k_; }

  /// Determinant of the submatrix with the given kept rows/columns
  /// (0-based, strictly increasing). Memoized cofactor expansion.
  Poly minor_kept(std::span<const int> rows, std::span<const int> cols) const;

  /// Determinant after deleting the given rows/columns.
  Poly minor_deleted(std::span<const int> drows, std::span<const int> dcols) const;

  /// Numeric instance: random values on the free entries.
  FpMatrix random_point(const PrimeField& f, algebra::CounterRng& rng) const;

  /// Numeric determinant of a kept-submatrix of a point.
  static u64 point_minor(const FpMatrix& x, std::span<const int> rows,
                         std::span<const int> cols, const PrimeField& f);

 private:
  SymbolicMatrix() = default;
  int m_ = 0;
  int k_ = 0;  // block size when block-zero; 0 for generic
  std::vector<int> ent_;
  algebra::PolyRing::Ptr ring_;
  // expansion cache, shared across concurrent minor calls
  struct Memo {
    std::mutex mu;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Poly> map;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// Deleted row/column index lists (0-based), same length.
struct MinorId {
  std::vector<int> deleted_rows;
  std::vector<int> deleted_cols;
};

/// One representative per unordered {rows, cols} pair.
std::vector<std::pair<MinorId, Poly>> all_minors(const SymbolicMatrix& x, int size);

/// Count of deduplicated minors: (C^2 + C)/2 with C = binom(m, size).
algebra::BigInt all_minors_count(int m, int size);

/// Signed linear identity among same-size minors of a symmetric matrix:
/// sum_l (-1)^l X_{I j_l, J \ j_l} with the row tuple (I..., j_l) taken in
/// that order. I has size-1 elements, J has size+1.
bool plucker_check(const SymbolicMatrix& x, std::span<const int> I,
                   std::span<const int> J, int size);

/// Same sum with one term's sign flipped; used as the negative control.
bool plucker_check_broken(const SymbolicMatrix& x, std::span<const int> I,
                          std::span<const int> J, int size, int flip);

struct SpanResult {
  int minors = 0;
  int dimension = 0;
  int samples_used = 0;
  bool stabilized = false;
};

/// Rank over F_p of the (points x minors) evaluation matrix; points are
/// sampled directly in the free matrix entries.
SpanResult minor_span_dimension(const SymbolicMatrix& x, int size,
                                const PrimeField& f, u64 seed, int margin = 40);

// ---- closed-form census ----

long long dim_formula(const GramSpec& spec);
algebra::BigInt expected_degree(const GramSpec& spec);  // r >= 2k-1
algebra::BigInt component_count(const GramSpec& spec);

struct SegreRow {
  int i;
  algebra::BigInt count;   // binom(n, i)
  algebra::BigInt degree;  // binom(nk-2, ik-1)
};
struct SegreData {
  std::vector<SegreRow> rows;
  algebra::BigInt as_stated_total;
  algebra::BigInt unordered_total;
  bool totals_disagree = false;
};
SegreData segre_component_data(int k, int n);

algebra::BigInt binom(long long n, long long k);

}  // namespace isogram::gramvar

#endif
