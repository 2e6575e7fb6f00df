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

#ifndef ISOGRAM_PARAMZOO_HPP
#define ISOGRAM_PARAMZOO_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "algebra/fp_matrix.hpp"
#include "algebra/poly.hpp"
#include "algebra/rng.hpp"

namespace isogram::paramzoo {

using algebra::CounterRng;
using algebra::FpMatrix;
using algebra::Poly;
using algebra::PrimeField;
using algebra::u64;

/// Bilinear form carried explicitly by every configuration. Diagonal forms
/// store the signature entries; the hyperbolic form is [[0, Id],[Id, 0]].
struct QuadForm {
  enum class Kind { Diagonal, Hyperbolic } kind = Kind::Diagonal;
  std::vector<int> diag;  // used when Kind::Diagonal
  int size = 0;

  static QuadForm diagonal(std::vector<int> entries);
  static QuadForm hyperbolic(int size);  // size even
  /// diag(-1, +1, -1, +1, ...), the alternating convention.
  static QuadForm alternating(int size);
  /// (+, -, -, +, -), the rank-5 convention.
  static QuadForm signature5();

  u64 dot(std::span<const u64> a, std::span<const u64> b, const PrimeField& f) const;
  Poly dot(std::span<const Poly> a, std::span<const Poly> b) const;
  FpMatrix matrix(const PrimeField& f) const;
};

// ---------------- canonical P/H/V layout ----------------

/// Index bookkeeping for the N = n^2(n-1)/2 invariant coordinates:
/// P_{ij} (i<j), then H_{ij} (i<j), then V_{i,jk} (per i, pairs j<k lex).
struct PhvLayout {
  int n;
  explicit PhvLayout(int n_);
  int count() const;                      // N
  int pidx(int i, int j) const;           // 1-based, i < j
  int hidx(int i, int j) const;
  int vidx(int i, int j, int k) const;    // j < k, both != i
  /// V_{i,kj} = -V_{i,jk}: returns the index and sets sign accordingly.
  int vidx_signed(int i, int j, int k, int& sign) const;
  std::vector<std::string> names() const;  // P12, H12, V123, ...
};

struct PHVPoint {
  int n = 0;
  std::vector<u64> values;  // PhvLayout order

  u64 P(int i, int j) const;
  u64 H(int i, int j) const;
  /// Antisymmetric in (j,k); the field supplies the negation.
  u64 V(int i, int j, int k, const PrimeField& f) const;
};

// ---------------- rank-5 null-cone parametrization ----------------

/// Seven parameters (a..g) per field.
struct NullConeConfig {
  int n = 0;
  std::vector<u64> params;  // 7n values

  static NullConeConfig random(int n, const PrimeField& f, CounterRng& rng);
};

struct PWConfiguration {
  int n = 0, r = 0;
  QuadForm form;
  std::vector<std::vector<u64>> P, W;  // n vectors each, length r
};

/// Momentum/polarization vectors on the null cone; isotropy holds exactly.
PWConfiguration nullcone_point(const NullConeConfig& cfg, const PrimeField& f);

/// Gram matrix of the interleaved rows P_1, W_1, ..., P_n, W_n.
FpMatrix gram_from_pw(const PWConfiguration& cfg, const PrimeField& f);

/// Invariant coordinates from a 2n x 2n block-zero Gram matrix; nullopt
/// when some x_{2j-1,2k-1} denominator vanishes (caller resamples).
std::optional<PHVPoint> invariants_from_gram(const FpMatrix& x, int n,
                                             const PrimeField& f);

// ---------------- rank-4 spinor parametrization ----------------

/// Per field: u, u-bar, v in F^2.
struct SpinorConfig {
  int n = 0;
  std::vector<std::array<u64, 2>> u, ub, v;

  static SpinorConfig random(int n, const PrimeField& f, CounterRng& rng);
};

struct SpinorPoint {
  PHVPoint phv;
  FpMatrix gram;  // 2n x 2n, rank <= 4
};

/// Gram matrix and invariants for the main rank-4 component; nullopt when a
/// bracket denominator vanishes.
std::optional<SpinorPoint> spinor_point(const SpinorConfig& cfg, const PrimeField& f);

u64 bracket_uu(const SpinorConfig& c, int i, int j, const PrimeField& f);
u64 bracket_uub(const SpinorConfig& c, int i, int s, const PrimeField& f);
u64 bracket_vv(const SpinorConfig& c, int i, int j, const PrimeField& f);

// ---------------- two-point coordinates ----------------

/// z_{st} = H_{st} / P_{st}^3 for all s < t; nullopt when some P vanishes.
std::optional<std::vector<u64>> twopoint_coords(const PHVPoint& p, const PrimeField& f);
/// Reciprocal coordinates P^3/H.
std::optional<std::vector<u64>> twopoint_reciprocal(const PHVPoint& p,
                                                    const PrimeField& f);

/// y_{st} = [s sbar][t tbar]/[s t]^3 for all pairs; nullopt on zero brackets.
std::optional<std::vector<u64>> cubed_grassmannian_point(const SpinorConfig& cfg,
                                                         const PrimeField& f);
/// The degree-12 relation among the six y's of fields {1,2,3,4}.
u64 cubed_grassmannian_relation(std::span<const u64> y, const PrimeField& f);

// ---------------- isotropic matrices and components ----------------

/// k x r matrix with Y Q Y^T = 0, built row by row: solve the linear
/// orthogonality constraints, then one quadratic (retry on non-residue).
FpMatrix isotropic_sample(int k, int r, const QuadForm& q, const PrimeField& f,
                          CounterRng& rng, int max_retries = 64);

/// Global sign e with det(Y_A) = e * det(Y_{A^c}) over all A; throws when
/// the signs are inconsistent (input off the rank-k isotropic locus).
int component_sign(const FpMatrix& y, const PrimeField& f);

/// Fresh full-rank sample from the chosen component of the k x 2k
/// isotropic variety (alternating form).
FpMatrix sample_component(int k, int sign, const PrimeField& f, CounterRng& rng);

/// det(X Q Y^T) for the alternating form.
u64 pairing_det(const FpMatrix& x, const FpMatrix& y, const QuadForm& q,
                const PrimeField& f);

/// Parity law: singular exactly when (k odd, same component) or
/// (k even, different components).
bool parity_expect_singular(int k, bool same_component);

/// Verdict for one pair: true iff det(X Q Y^T) is zero/nonzero exactly as
/// the parity law predicts for the claimed component relation.
bool parity_check(const FpMatrix& x, const FpMatrix& y, bool same_component,
                  const PrimeField& f);

// ---------------- block lifts and low-rank parametrizations ----------------

/// Blocks (X_ij, X_ij A_j^T; A_i X_ij, A_i X_ij A_j^T); preserves rank.
FpMatrix lowrank_lift(const FpMatrix& x_small, int ell, int k,
                      const std::vector<FpMatrix>& a, const PrimeField& f);

/// X_ij = (s_i t_j - s_j t_i)^2 * a_i a_j^T, rank <= 3.
FpMatrix hadamard_r3(int k, int n, const std::vector<std::vector<u64>>& a,
                     std::span<const u64> s, std::span<const u64> t,
                     const PrimeField& f);

/// Rank-2 bipartite outer-product matrix for a nonempty proper subset I.
FpMatrix segre_r2(int k, int n, const std::vector<bool>& in_I,
                  const std::vector<std::vector<u64>>& a, const PrimeField& f);

/// Component parametrization for rank 4: stacked 2x4 blocks of plus/minus
/// type against the hyperbolic form. in_I[i] selects the plus block.
FpMatrix ypm_gram(const SpinorConfig& cfg, const std::vector<bool>& in_I,
                  const PrimeField& f);

// ---------------- symbolic builders (shared with dimscan and tests) -------

/// Ring in a1..g1, a2..g2, ..., 7 variables per field.
algebra::PolyRing::Ptr nullcone_ring(int n);
/// The ten coordinate polynomials (p0..p4, w0..w4) of one field.
struct PWPolys {
  std::array<Poly, 5> p, w;
};
std::vector<PWPolys> nullcone_polys(int n);

/// Ring in u11,u12,ub11,ub12,v11,v12, ..., 6 variables per field.
algebra::PolyRing::Ptr spinor_ring(int n);
struct SpinorPolys {
  std::array<Poly, 2> u, ub, v;
};
std::vector<SpinorPolys> spinor_polys(int n);

}  // namespace isogram::paramzoo

#endif
