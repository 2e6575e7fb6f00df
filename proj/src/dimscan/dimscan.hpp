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

#ifndef ISOGRAM_DIMSCAN_HPP
#define ISOGRAM_DIMSCAN_HPP

#include <optional>
#include <span>
#include <vector>

#include "algebra/poly.hpp"
#include "algebra/rng.hpp"
#include "paramzoo/paramzoo.hpp"

namespace isogram::dimscan {

using algebra::CounterRng;
using algebra::Poly;
using algebra::PrimeField;
using algebra::u64;

/// Polynomial or rational coordinates of a parametrized family. Denominators
/// are kept factored as den^den_pow so the Jacobian can be evaluated without
/// expanding powers; a whole Jacobian row shares its denominator, so rank is
/// computed on denominator-scaled rows.
struct ParamMap {
  struct Coord {
    Poly num;
    std::optional<Poly> den;  // absent: polynomial coordinate
    int den_pow = 1;
  };
  int parameter_count = 0;
  std::vector<Coord> coords;
  bool cone = false;  // projective dimension = affine rank - 1

  int coordinate_count() const { return (int)coords.size(); }
};

struct DimReport {
  int observed_rank = 0;
  int trials = 0;
  u64 prime = 0;
  bool stabilized = false;
  /// observed_rank - 1 when the map is a cone, else observed_rank.
  int reported_dimension = 0;
};

/// Rank of the Jacobian at one parameter point; nullopt when a denominator
/// vanishes there (caller resamples).
std::optional<int> jacobian_rank_at(const ParamMap& map, const PrimeField& f,
                                    std::span<const u64> point);

/// Max Jacobian rank over `trials` random points; stabilized when the whole
/// second half of the trials attains the max.
DimReport image_dimension(const ParamMap& map, const PrimeField& f, int trials,
                          u64 seed);

// ---- map builders ----

/// Gram-entry map of the rank-5 null-cone configuration (7n parameters).
ParamMap nullcone_gram_map(int n);
/// Gram-entry map of the rank-4 main-component spinor configuration.
ParamMap spinor_gram_map(int n);
/// Rank-3 map X_ij = (s_i t_j - s_j t_i)^2 a_i a_j^T.
ParamMap hadamard_gram_map(int k, int n);
/// Rank-2 bipartite map for the subset {1}.
ParamMap segre_gram_map(int k, int n);

/// Invariant coordinates P, H, V; r = 5 (null cone) or 4 (spinor).
ParamMap phv_map(int n, int r);
/// Two-point coordinates H/P^3; a cone map.
ParamMap twopoint_map(int n, int r);

struct ConjectureRow {
  int n;
  int observed;   // projective dimension
  int predicted;  // min(5n-11, C(n,2)-1)
  bool match;
};
std::vector<ConjectureRow> conjecture_scan(int n_min, int n_max, const PrimeField& f,
                                           int trials, u64 seed);

}  // namespace isogram::dimscan

#endif
