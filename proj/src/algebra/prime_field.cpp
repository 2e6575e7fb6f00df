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

#include "algebra/prime_field.hpp"

namespace isogram::algebra {

PrimeField::PrimeField(u64 p) : p_(p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw std::invalid_argument("PrimeField: modulus must be an odd prime");
  if (p >= (1ULL << 63))
    throw std::invalid_argument("PrimeField: modulus must fit in 63 bits");
}

u64 PrimeField::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 PrimeField::inv(u64 a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

std::optional<u64> PrimeField::sqrt(u64 a) const {
  if (a == 0) return 0;
  if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
  if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
  // Tonelli-Shanks
  u64 q = p_ - 1;
  unsigned s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  u64 z = 2;
  while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
  u64 m = s;
  u64 c = pow(z, q);
  u64 t = pow(a, q);
  u64 r = pow(a, (q + 1) / 2);
  while (t != 1) {
    u64 tt = t;
    u64 i = 0;
    while (tt != 1) { tt = mul(tt, tt); ++i; }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    m = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

bool PrimeField::is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL})
    if (n % p == 0) return n == p;
  u64 d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) { d /= 2; ++s; }
  auto mulm = [n](u64 a, u64 b) { return (u64)((u128)a * b % n); };
  auto powm = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mulm(r, a);
      a = mulm(a, a);
      e >>= 1;
    }
    return r;
  };
  // deterministic witnesses for 64-bit range
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    u64 x = powm(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 0; i + 1 < s; ++i) {
      x = mulm(x, x);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace isogram::algebra
