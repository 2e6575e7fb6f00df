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

#include "algebra/poly.hpp"

#include <cctype>
#include <sstream>

namespace isogram::algebra {

u64 reduce_mpz(const BigInt& z, const PrimeField& f) {
  mpz_class mod;
  u64 m = f.modulus();
  mpz_import(mod.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
  return (u64)mpz_get_ui(r.get_mpz_t());
}

u64 reduce_mpq(const BigRational& q, const PrimeField& f) {
  u64 num = reduce_mpz(q.get_num(), f);
  u64 den = reduce_mpz(q.get_den(), f);
  if (den == 0)
    throw std::domain_error("reduce_mpq: denominator divisible by modulus");
  return f.mul(num, f.inv(den));
}

namespace {

template <class C>
std::string coeff_str(const C& c) {
  return coeff::to_string(c);
}

template <class C>
bool coeff_is_negative(const C& c);
template <>
bool coeff_is_negative<long long>(const long long& c) { return c < 0; }
template <>
bool coeff_is_negative<BigRational>(const BigRational& c) { return c < 0; }

template <class C>
C coeff_abs(const C& c);
template <>
long long coeff_abs<long long>(const long long& c) { return c < 0 ? -c : c; }
template <>
BigRational coeff_abs<BigRational>(const BigRational& c) { return abs(c); }

template <class C>
bool coeff_is_one(const C& c) { return c == C(1); }

template <class C>
C parse_coeff(const std::string& s);
template <>
long long parse_coeff<long long>(const std::string& s) { return std::stoll(s); }
template <>
BigRational parse_coeff<BigRational>(const std::string& s) {
  BigRational q(s);
  q.canonicalize();
  return q;
}

}  // namespace

template <class C>
std::string SparsePoly<C>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = coeff_is_negative(c);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const C a = coeff_abs(c);
    bool emitted = false;
    if (!coeff_is_one(a) || m.total_degree() == 0) {
      os << coeff_str(a);
      emitted = true;
    }
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (!m.exp[i]) continue;
      if (emitted) os << "*";
      os << ring_->var_name(i);
      if (m.exp[i] > 1) os << "^" << m.exp[i];
      emitted = true;
    }
  }
  return os.str();
}

template <class C>
std::string SparsePoly<C>::to_json() const {
  // {"e0,e1,...": "coeff", ...}
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "\"";
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (i) os << ",";
      os << m.exp[i];
    }
    os << "\":\"" << coeff_str(c) << "\"";
  }
  os << "}";
  return os.str();
}

template <class C>
SparsePoly<C> SparsePoly<C>::parse(PolyRing::Ptr ring, const std::string& text) {
  SparsePoly out(ring);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  if (i < n && text.compare(i, 1, "0") == 0 && i + 1 == n) return out;
  int sign = 1;
  while (i < n) {
    skip_ws();
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    // coefficient (optional)
    std::string num;
    while (i < n && (std::isdigit((unsigned char)text[i]) || text[i] == '/')) {
      num += text[i++];
    }
    C c = num.empty() ? C(1) : parse_coeff<C>(num);
    if (sign < 0) c = -c;
    Monomial m{std::vector<std::uint32_t>(ring->arity(), 0)};
    skip_ws();
    while (i < n) {
      if (text[i] == '*') { ++i; skip_ws(); continue; }
      if (text[i] == '+' || text[i] == '-') break;
      // variable name: letters, digits, underscore (longest match in ring)
      std::string name;
      while (i < n && (std::isalnum((unsigned char)text[i]) || text[i] == '_')) {
        name += text[i++];
      }
      if (name.empty())
        throw std::invalid_argument("poly parse: unexpected character at " +
                                    std::to_string(i));
      int vi = ring->var_index(name);
      if (vi < 0)
        throw std::invalid_argument("poly parse: unknown variable " + name);
      std::uint32_t e = 1;
      if (i < n && text[i] == '^') {
        ++i;
        std::string es;
        while (i < n && std::isdigit((unsigned char)text[i])) es += text[i++];
        if (es.empty()) throw std::invalid_argument("poly parse: missing exponent");
        e = (std::uint32_t)std::stoul(es);
      }
      m.exp[(std::size_t)vi] += e;
      skip_ws();
    }
    out.add_term(m, c);
    sign = 1;
    skip_ws();
    if (i >= n) break;
  }
  return out;
}

template class SparsePoly<long long>;
template class SparsePoly<BigRational>;

}  // namespace isogram::algebra
