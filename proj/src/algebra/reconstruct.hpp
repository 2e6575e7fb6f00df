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

#ifndef ISOGRAM_ALGEBRA_RECONSTRUCT_HPP
#define ISOGRAM_ALGEBRA_RECONSTRUCT_HPP

#include <optional>
#include <span>
#include <vector>

#include "algebra/poly.hpp"

namespace isogram::algebra {

/// Recover a/b from a residue mod p with |a|, b <= sqrt(p/2), when such a
/// fraction exists. Callers retry with a larger prime (or a second prime
/// via CRT) on failure.
std::optional<BigRational> rational_reconstruct(u64 residue, const PrimeField& f);

/// Alternative lifting strategy: find a single multiplier m (|m| < p) such
/// that every coefficient of m*v has a centered lift bounded by `bound`.
/// Returns the lifted integer coefficients, or nullopt.
std::optional<std::vector<BigInt>> small_multiplier_lift(std::span<const u64> v,
                                                         const PrimeField& f,
                                                         const BigInt& bound);

/// Centered representative in (-p/2, p/2].
BigInt centered_lift(u64 residue, const PrimeField& f);

}  // namespace isogram::algebra

#endif
