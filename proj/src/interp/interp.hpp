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

#ifndef ISOGRAM_INTERP_HPP
#define ISOGRAM_INTERP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algebra/poly.hpp"
#include "algebra/rng.hpp"
#include "paramzoo/paramzoo.hpp"

namespace isogram::interp {

using algebra::CounterRng;
using algebra::Poly;
using algebra::PrimeField;
using algebra::QPoly;
using algebra::u64;

/// Multidegree (e_1..e_n | f_1..f_n). The coarse grading assigns
/// z = 1 to P and V and z = 2 to H, which works out to (sum e + sum f)/2.
struct GradedDegree {
  std::vector<int> e, f;

  int n() const { return (int)e.size(); }
  int z() const;
  bool is_zero() const;
  bool leq(const GradedDegree& o) const;  // componentwise
  GradedDegree minus(const GradedDegree& o) const;
  bool operator==(const GradedDegree&) const = default;
  bool operator<(const GradedDegree& o) const;  // by z, then lex
  std::string str() const;
};

/// The N graded variables P_{ij}, H_{ij}, V_{i,jk} in canonical order.
class PhvRing {
 public:
  explicit PhvRing(int n);

  int n() const { return layout_.n; }
  int var_count() const { return layout_.count(); }
  const paramzoo::PhvLayout& layout() const { return layout_; }
  const GradedDegree& var_degree(int v) const { return degrees_[(std::size_t)v]; }
  const algebra::PolyRing::Ptr& poly_ring() const { return ring_; }

  /// Image of variable v under a permutation of the fields (0-based image
  /// table); sign is -1 when the V pair had to be swapped back into order.
  std::pair<int, int> permute_var(int v, std::span<const int> perm) const;

 private:
  paramzoo::PhvLayout layout_;
  std::vector<GradedDegree> degrees_;
  algebra::PolyRing::Ptr ring_;
  struct VarInfo { char type; int i, j, k; };
  std::vector<VarInfo> info_;
};

using ExpVec = std::vector<std::uint16_t>;

struct MonomialBasis {
  GradedDegree degree;
  std::vector<ExpVec> monomials;  // ordered, duplicate-free
};

/// Complete enumeration by backtracking over the graded variables.
MonomialBasis enumerate_monomials(const PhvRing& ring, const GradedDegree& d);

/// Independent counting recursion (per-variable exponent loop); test oracle.
long long count_monomials_bruteforce(const PhvRing& ring, const GradedDegree& d);

/// All monomial degrees <= cap componentwise (0 included).
std::vector<GradedDegree> achievable_subdegrees(const PhvRing& ring,
                                                const GradedDegree& cap);
/// All achievable degrees with 1 <= z <= zmax.
std::vector<GradedDegree> achievable_degrees_z(const PhvRing& ring, int zmax);

/// Simultaneous relabeling of the fields.
GradedDegree apply_perm(const GradedDegree& d, std::span<const int> perm);
GradedDegree orbit_rep(const GradedDegree& d);
std::vector<GradedDegree> orbit_expand(const GradedDegree& d);

/// Deterministic supply of invariant coordinate vectors from the dominant
/// parametrization (null cone for r=5, main-component spinor for r=4).
class SamplePool {
 public:
  SamplePool(int n, int r, const PrimeField& f, u64 seed);

  const std::vector<u64>& sample(std::size_t i);
  const std::vector<u64>& holdout(std::size_t i);
  const PrimeField& field() const { return field_; }
  int n() const { return n_; }
  int r() const { return r_; }

 private:
  std::vector<u64> draw(CounterRng& rng);
  int n_, r_;
  PrimeField field_;
  CounterRng main_, hold_;
  std::vector<std::vector<u64>> samples_, holdouts_;
};

struct ScanOptions {
  int extra_samples = 50;    // rows beyond the monomial count
  int stabilize_rows = 10;   // extra rows that must not raise the rank
  int max_restarts = 4;
  int holdout_points = 50;
  bool lift = false;         // lift mingens to rational coefficients
};

struct RelationSpace {
  MonomialBasis basis;
  std::vector<std::vector<u64>> kernel;  // reduced echelon kernel basis
  int samples_used = 0;
  bool stabilized = false;
};

/// Kernel of the (samples x monomials) evaluation matrix over F_p.
RelationSpace relation_space(const PhvRing& ring, SamplePool& pool,
                             const GradedDegree& d, const ScanOptions& opt = {});

struct DegreeScan {
  GradedDegree degree;
  int monomial_count = 0;
  int relation_dim = 0;
  int lower_ideal_dim = 0;
  int mingen_count = 0;
  int orbit_size = 0;
  int samples_used = 0;
  u64 prime = 0;
  bool canonicalized = false;  // derived from an orbit representative
  std::vector<std::vector<u64>> mingens;  // coefficient vectors over the basis
  std::vector<std::string> lifted;        // canonical text, when lifting ran
};

/// Graded generator bookkeeping for one (n, r, prime) pipeline run.
class Ledger {
 public:
  Ledger() = default;
  Ledger(int n, int r, u64 prime) : n_(n), r_(r), prime_(prime) {}

  int n() const { return n_; }
  int r() const { return r_; }
  u64 prime() const { return prime_; }

  bool has(const GradedDegree& d) const { return entries_.count(d) > 0; }
  const DegreeScan* find(const GradedDegree& d) const;
  void insert(DegreeScan scan);
  const std::map<GradedDegree, DegreeScan>& entries() const { return entries_; }

  void save(const std::string& path) const;
  static Ledger load(const std::string& path);

 private:
  int n_ = 0, r_ = 0;
  u64 prime_ = 0;
  std::map<GradedDegree, DegreeScan> entries_;
};

/// Relation space, span of lower-degree generator multiples, and the
/// resulting minimal-generator count at one degree. Requires every divisor
/// degree to be present in the ledger.
DegreeScan mingen_count(const PhvRing& ring, SamplePool& pool, const GradedDegree& d,
                        Ledger& ledger, const ScanOptions& opt = {});

/// Recursively scans missing divisor degrees first; inserts results (and
/// their orbit relabelings) into the ledger.
DegreeScan ensure_scanned(const PhvRing& ring, SamplePool& pool,
                          const GradedDegree& d, Ledger& ledger,
                          const ScanOptions& opt = {});

struct ZScanSummary {
  int degrees_scanned = 0;
  int orbit_reps = 0;
  long long total_mingens = 0;  // orbit-weighted
  std::vector<DegreeScan> reps_with_mingens;
};

/// Scan every achievable degree with z in [1, zmax] (orbit-reduced).
ZScanSummary scan_z_range(const PhvRing& ring, SamplePool& pool, int zmax,
                          Ledger& ledger, const ScanOptions& opt = {});

// ---------------- lifting ----------------

struct LiftedRelation {
  QPoly poly;          // integer coefficients after clearing denominators
  bool lifted = false;
  bool verified = false;  // vanishes on fresh samples over the second prime
  std::string note;
};

/// Per-coefficient rational reconstruction (or the single-multiplier
/// variant), then revalidation over a second prime.
std::vector<LiftedRelation> lift_relations(
    const PhvRing& ring, const MonomialBasis& basis,
    const std::vector<std::vector<u64>>& kernel, const PrimeField& f,
    SamplePool& second_pool, int check_points = 50, bool small_multiplier = false);

/// True iff the fixture polynomial vanishes at `trials` pool samples.
bool vanish_check(const PhvRing& ring, const Poly& fixture, SamplePool& pool,
                  int trials);

u64 eval_phv_poly(const PhvRing& ring, const Poly& p, std::span<const u64> values,
                  const PrimeField& f);

// ---------------- transcribed relation fixtures ----------------

namespace fixtures {

/// det X = 4 H12 H23 H13 - (V123 H23 - V213 H13 + V312 H12 + V123 V213 V312)^2,
/// right-hand side as a polynomial in the nine invariants (n = 3).
Poly three_field_sextic(const PhvRing& ring);

/// H_st + V_{s,kt} V_{t,ks} for all s < t and k outside {s, t}.
std::vector<Poly> hv_quadrics(const PhvRing& ring);

/// The 4 x 3 matrix of V's (n = 4) and its distinguished kernel vector.
std::vector<std::vector<Poly>> v_matrix(const PhvRing& ring);
std::vector<Poly> v_matrix_kernel(const PhvRing& ring);

/// Four 3x3 minors plus four kernel products (the eight cubics, n = 4).
std::vector<Poly> rank5_cubics(const PhvRing& ring);

/// Rank-4 generator list (n = 4): 2x2 minors of V, kernel products, the ten
/// entries of V S V^T, and the HV quadrics.
std::vector<Poly> rank4_generators(const PhvRing& ring);

/// The 55-term generator of multidegree (2,1,2,2 | 2,1,2,2).
Poly degree7_generator55(const PhvRing& ring);

/// Symbolic identity check over the 12-entry matrix ring (n = 3):
/// det X equals the sextic combination of the invariants.
bool three_field_det_identity_symbolic();

}  // namespace fixtures

}  // namespace isogram::interp

#endif
