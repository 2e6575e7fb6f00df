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

#include "algebra/reconstruct.hpp"

namespace isogram::algebra {

namespace {
BigInt to_mpz(u64 v) {
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return z;
}
}  // namespace

BigInt centered_lift(u64 residue, const PrimeField& f) {
  BigInt r = to_mpz(residue % f.modulus());
  BigInt p = to_mpz(f.modulus());
  if (r * 2 > p) r -= p;
  return r;
}

std::optional<BigRational> rational_reconstruct(u64 residue, const PrimeField& f) {
  if (residue == 0) return BigRational(0);
  BigInt p = to_mpz(f.modulus());
  BigInt bound = sqrt(p / 2);
  // half extended Euclid on (p, residue)
  BigInt r0 = p, r1 = to_mpz(residue % f.modulus());
  BigInt s0 = 0, s1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    r0 = r1; r1 = r2;
    BigInt s2 = s0 - q * s1;
    s0 = s1; s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  BigInt num = r1, den = s1;
  if (den < 0) { num = -num; den = -den; }
  BigInt g = gcd(num, den);
  if (g != 1) return std::nullopt;  // a/b must already be in lowest terms
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<std::vector<BigInt>> small_multiplier_lift(std::span<const u64> v,
                                                         const PrimeField& f,
                                                         const BigInt& bound) {
  // Candidate multiplier: the lcm of the denominators seen by per-entry
  // reconstruction. This is the m the coefficient bound singles out.
  BigInt m = 1;
  for (u64 c : v) {
    auto q = rational_reconstruct(c, f);
    if (!q) return std::nullopt;
    m = lcm(m, q->get_den());
  }
  BigInt p = to_mpz(f.modulus());
  if (m >= p) return std::nullopt;
  u64 mres = 0;
  {
    BigInt mm = m % p;
    mres = (u64)mpz_get_ui(mm.get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (u64 c : v) {
    BigInt lifted = centered_lift(f.mul(c, mres), f);
    if (abs(lifted) > bound) return std::nullopt;
    out.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace isogram::algebra
