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

#include "algebra/fp_matrix.hpp"

#include <stdexcept>

namespace isogram::algebra {

void FpMatrix::append_row(const std::vector<u64>& r) {
  if (cols_ == 0 && rows_ == 0) cols_ = r.size();
  if (r.size() != cols_)
    throw std::invalid_argument("FpMatrix::append_row: width mismatch");
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

FpMatrix FpMatrix::mul(const FpMatrix& a, const FpMatrix& b, const PrimeField& f) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("FpMatrix::mul: shape mismatch");
  FpMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      u64 v = a.at(i, k);
      if (!v) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(v, b.at(k, j)));
    }
  return c;
}

FpMatrix FpMatrix::random(std::size_t rows, std::size_t cols, const PrimeField& f,
                          CounterRng& rng) {
  FpMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.random(rng);
  return m;
}

namespace {

// Forward elimination; returns rank. Destroys `m`.
std::size_t eliminate(FpMatrix& m, const PrimeField& f) {
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && m.at(piv, c) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j) std::swap(m.at(r, j), m.at(piv, j));
    const u64 inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < C; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = r + 1; i < R; ++i) {
      const u64 factor = m.at(i, c);
      if (!factor) continue;
      u64* ri = m.row(i);
      const u64* rr = m.row(r);
      for (std::size_t j = c; j < C; ++j)
        ri[j] = f.sub(ri[j], f.mul(factor, rr[j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t FpMatrix::rank(const PrimeField& f) const {
  FpMatrix m = *this;
  return eliminate(m, f);
}

u64 FpMatrix::det(const PrimeField& f) const {
  if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
  FpMatrix m = *this;
  u64 det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t piv = c;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < cols_; ++j) std::swap(m.at(c, j), m.at(piv, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(c, c));
    const u64 inv = f.inv(m.at(c, c));
    for (std::size_t i = c + 1; i < rows_; ++i) {
      const u64 factor = f.mul(m.at(i, c), inv);
      if (!factor) continue;
      u64* ri = m.row(i);
      const u64* rc = m.row(c);
      for (std::size_t j = c; j < cols_; ++j)
        ri[j] = f.sub(ri[j], f.mul(factor, rc[j]));
    }
  }
  return det;
}

std::vector<std::size_t> FpMatrix::rref(const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(piv, j));
    const u64 inv = f.inv(at(r, c));
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = f.mul(at(r, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const u64 factor = at(i, c);
      if (!factor) continue;
      u64* ri = row(i);
      const u64* rr = row(r);
      for (std::size_t j = c; j < cols_; ++j)
        ri[j] = f.sub(ri[j], f.mul(factor, rr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<u64>> FpMatrix::nullspace(const PrimeField& f) const {
  FpMatrix m = *this;
  const std::vector<std::size_t> pivots = m.rref(f);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = f.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace isogram::algebra
