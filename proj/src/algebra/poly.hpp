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

#ifndef ISOGRAM_ALGEBRA_POLY_HPP
#define ISOGRAM_ALGEBRA_POLY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra/prime_field.hpp"

namespace isogram::algebra {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Variable-name list shared by all polynomials of one ring.
class PolyRing {
 public:
  using Ptr = std::shared_ptr<const PolyRing>;

  static Ptr make(std::vector<std::string> vars) {
    return Ptr(new PolyRing(std::move(vars)));
  }

  std::size_t arity() const { return vars_.size(); }
  const std::string& var_name(std::size_t i) const { return vars_.at(i); }
  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return (int)i;
    return -1;
  }

 private:
  explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}
  std::vector<std::string> vars_;
};

struct Monomial {
  std::vector<std::uint32_t> exp;

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic, leading term first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

namespace coeff {
inline bool is_zero(long long c) { return c == 0; }
inline bool is_zero(const BigRational& c) { return c == 0; }
inline std::string to_string(long long c) { return std::to_string(c); }
inline std::string to_string(const BigRational& c) { return c.get_str(); }
}  // namespace coeff

u64 reduce_mpz(const BigInt& z, const PrimeField& f);
u64 reduce_mpq(const BigRational& q, const PrimeField& f);

template <class C>
class SparsePoly {
 public:
  using Terms = std::map<Monomial, C, GrlexDescending>;

  SparsePoly() = default;
  explicit SparsePoly(PolyRing::Ptr ring) : ring_(std::move(ring)) {}

  static SparsePoly zero(PolyRing::Ptr ring) { return SparsePoly(std::move(ring)); }
  static SparsePoly constant(PolyRing::Ptr ring, C c) {
    SparsePoly p(std::move(ring));
    if (!coeff::is_zero(c))
      p.terms_.emplace(Monomial{std::vector<std::uint32_t>(p.ring_->arity(), 0)},
                       std::move(c));
    return p;
  }
  static SparsePoly variable(PolyRing::Ptr ring, std::size_t i, std::uint32_t e = 1) {
    SparsePoly p(std::move(ring));
    if (i >= p.ring_->arity())
      throw std::invalid_argument("SparsePoly: variable index out of range");
    Monomial m{std::vector<std::uint32_t>(p.ring_->arity(), 0)};
    m.exp[i] = e;
    if (e) p.terms_.emplace(std::move(m), C(1));
    else p.terms_.emplace(std::move(m), C(1));
    return p;
  }
  static SparsePoly from_terms(PolyRing::Ptr ring, Terms terms) {
    SparsePoly p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const PolyRing::Ptr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const C& c) {
    if (coeff::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (coeff::is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePoly operator-() const {
    SparsePoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_ring(b);
    SparsePoly r(a.ring_);
    const std::size_t nv = a.ring_->arity();
    Monomial prod{std::vector<std::uint32_t>(nv, 0)};
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < nv; ++i) prod.exp[i] = ma.exp[i] + mb.exp[i];
        r.add_term(prod, ca * cb);
      }
    }
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly& scale(const C& s) {
    if (coeff::is_zero(s)) { terms_.clear(); return *this; }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend SparsePoly operator*(SparsePoly a, const C& s) { return a.scale(s); }

  SparsePoly pow(unsigned e) const {
    SparsePoly r = constant(ring_, C(1));
    SparsePoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  bool operator==(const SparsePoly& o) const {
    return terms_ == o.terms_;
  }

  SparsePoly partial_derivative(std::size_t var) const {
    if (var >= ring_->arity())
      throw std::invalid_argument("partial_derivative: variable index out of range");
    SparsePoly r(ring_);
    for (const auto& [m, c] : terms_) {
      if (m.exp[var] == 0) continue;
      Monomial d = m;
      const C cc = c * C((long)m.exp[var]);
      d.exp[var] -= 1;
      r.add_term(d, cc);
    }
    return r;
  }

  /// True iff the variable occurs in some term.
  bool involves(std::size_t var) const {
    for (const auto& [m, c] : terms_)
      if (m.exp[var]) return true;
    return false;
  }

  u64 eval_mod(const PrimeField& f, std::span<const u64> point) const {
    if (point.size() != ring_->arity())
      throw std::invalid_argument("eval: point length must match ring arity");
    u64 acc = 0;
    for (const auto& [m, c] : terms_) {
      u64 v = reduce_coeff(c, f);
      for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (!m.exp[i]) continue;
        v = f.mul(v, f.pow(point[i], m.exp[i]));
      }
      acc = f.add(acc, v);
    }
    return acc;
  }

  /// Exact evaluation over the rationals.
  BigRational eval_exact(std::span<const BigRational> point) const {
    if (point.size() != ring_->arity())
      throw std::invalid_argument("eval: point length must match ring arity");
    BigRational acc(0);
    for (const auto& [m, c] : terms_) {
      BigRational v = to_rational(c);
      for (std::size_t i = 0; i < m.exp.size(); ++i)
        for (std::uint32_t e = 0; e < m.exp[i]; ++e) v *= point[i];
      acc += v;
    }
    return acc;
  }

  std::string to_string() const;
  std::string to_json() const;
  static SparsePoly parse(PolyRing::Ptr ring, const std::string& text);

 private:
  void check_ring(const SparsePoly& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->arity() == o.ring_->arity()))
      throw std::invalid_argument("SparsePoly: mixed rings");
  }
  static u64 reduce_coeff(long long c, const PrimeField& f) { return f.from_int(c); }
  static u64 reduce_coeff(const BigRational& c, const PrimeField& f) {
    return reduce_mpq(c, f);
  }
  static BigRational to_rational(long long c) { return BigRational((long)c); }
  static BigRational to_rational(const BigRational& c) { return c; }

  PolyRing::Ptr ring_;
  Terms terms_;
};

using Poly = SparsePoly<long long>;
using QPoly = SparsePoly<BigRational>;

/// Quotient of two polynomials; the denominator is nonzero by construction
/// and evaluation rejects points where it vanishes.
struct RationalFunction {
  Poly num;
  Poly den;

  RationalFunction(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
      throw std::invalid_argument("RationalFunction: zero denominator");
  }
  static RationalFunction from_poly(Poly p) {
    Poly one = Poly::constant(p.ring(), 1);
    return RationalFunction(std::move(p), std::move(one));
  }

  RationalFunction operator+(const RationalFunction& o) const {
    return RationalFunction(num * o.den + o.num * den, den * o.den);
  }
  RationalFunction operator-(const RationalFunction& o) const {
    return RationalFunction(num * o.den - o.num * den, den * o.den);
  }
  RationalFunction operator*(const RationalFunction& o) const {
    return RationalFunction(num * o.num, den * o.den);
  }
  RationalFunction operator-() const { return RationalFunction(-num, den); }

  /// Quotient rule, returned as the (f'g - fg', g^2) pair.
  RationalFunction partial_derivative(std::size_t var) const {
    return RationalFunction(
        num.partial_derivative(var) * den - num * den.partial_derivative(var),
        den * den);
  }

  std::optional<u64> eval_mod(const PrimeField& f, std::span<const u64> p) const {
    u64 d = den.eval_mod(f, p);
    if (d == 0) return std::nullopt;
    return f.mul(num.eval_mod(f, p), f.inv(d));
  }
};

// explicit instantiation declarations (definitions in poly.cpp)
extern template class SparsePoly<long long>;
extern template class SparsePoly<BigRational>;

}  // namespace isogram::algebra

#endif
