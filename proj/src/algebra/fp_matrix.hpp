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

#ifndef ISOGRAM_ALGEBRA_FP_MATRIX_HPP
#define ISOGRAM_ALGEBRA_FP_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "algebra/prime_field.hpp"

namespace isogram::algebra {

/// Dense row-major matrix over a prime field. Elimination uses partial
/// pivoting by first nonzero entry, so results are deterministic for a
/// fixed row order.
class FpMatrix {
 public:
  FpMatrix() : rows_(0), cols_(0) {}
  FpMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u64& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  u64 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  u64* row(std::size_t i) { return a_.data() + i * cols_; }
  const u64* row(std::size_t i) const { return a_.data() + i * cols_; }

  void append_row(const std::vector<u64>& r);

  FpMatrix transpose() const;
  static FpMatrix mul(const FpMatrix& a, const FpMatrix& b, const PrimeField& f);
  static FpMatrix random(std::size_t rows, std::size_t cols, const PrimeField& f,
                         CounterRng& rng);

  /// Rank by forward elimination (operates on a copy).
  std::size_t rank(const PrimeField& f) const;

  u64 det(const PrimeField& f) const;

  /// Reduced row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref(const PrimeField& f);

  /// Basis of the right kernel {v : M v = 0}.
  std::vector<std::vector<u64>> nullspace(const PrimeField& f) const;

  bool operator==(const FpMatrix&) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<u64> a_;
};

}  // namespace isogram::algebra

#endif
