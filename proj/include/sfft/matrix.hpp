// Copyright 2026 The sfft Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SFFT_MATRIX_HPP_
#define SFFT_MATRIX_HPP_

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "sfft/modulus.hpp"

namespace sfft {

/// Dense row-major complex matrix. Only what the oracles and checks need.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t size, double diagonal = 1.0) {
    ComplexMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) m(i, i) = diagonal;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// Rows [r0, r0 + nr) x cols [c0, c0 + nc).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const {
    assert(r0 + nr <= rows_ && c0 + nc <= cols_);
    ComplexMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix a(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) a(c, r) = std::conj((*this)(r, c));
    return a;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.cols_ == b.rows_);
    ComplexMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const Complex ail = a(i, l);
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += ail * b(l, j);
      }
    return p;
  }

  std::vector<Complex> apply(std::span<const Complex> x) const {
    assert(x.size() == cols_);
    std::vector<Complex> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Complex acc{0.0, 0.0};
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
      y[r] = acc;
    }
    return y;
  }

  /// Largest entrywise |a - b|; shapes must agree.
  friend double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    double m = 0.0;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

}  // namespace sfft

#endif  // SFFT_MATRIX_HPP_
