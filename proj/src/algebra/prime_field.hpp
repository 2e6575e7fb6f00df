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

#ifndef ISOGRAM_ALGEBRA_PRIME_FIELD_HPP
#define ISOGRAM_ALGEBRA_PRIME_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "algebra/rng.hpp"

namespace isogram::algebra {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Arithmetic in Z/pZ for an odd prime p < 2^63. Elements are plain u64
/// values in [0, p); the field object is a small value type and cheap to copy.
class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 modulus() const { return p_; }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    if (s >= p_ || s < a) s -= p_;
    return s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a ? p_ - a : 0; }
  u64 mul(u64 a, u64 b) const { return (u64)((u128)a * b % p_); }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;

  /// Reduce a signed integer.
  u64 from_int(i64 v) const {
    i64 r = v % (i64)p_;
    return r < 0 ? (u64)(r + (i64)p_) : (u64)r;
  }

  /// Square root by Tonelli-Shanks; nullopt for non-residues.
  std::optional<u64> sqrt(u64 a) const;

  u64 random(CounterRng& rng) const { return rng.below(p_); }
  u64 random_nonzero(CounterRng& rng) const {
    for (;;) {
      u64 v = rng.below(p_);
      if (v) return v;
    }
  }

  /// Miller-Rabin with a deterministic witness set for 64-bit inputs.
  static bool is_prime(u64 n);

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  u64 p_;
};

/// Default working primes (62-bit); the second one guards against an
/// unlucky choice via cross-checking.
constexpr u64 kDefaultPrime = 4611686018427387847ULL;   // 2^62 - 57
constexpr u64 kDefaultSecondPrime = 4611686018427387817ULL;
constexpr u64 kDefaultSeed = 1;

}  // namespace isogram::algebra

#endif
