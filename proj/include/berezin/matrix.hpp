// Copyright 2026 The Berezin Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace berezin {

/// Dense real n x n matrix, row-major.
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n, 0.0) {
    if (n == 0) throw std::invalid_argument("SquareMatrix dimension must be >= 1");
  }

  SquareMatrix(std::initializer_list<std::initializer_list<double>> rows) : SquareMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("SquareMatrix rows must all have length n");
      std::size_t j = 0;
      for (double v : row) set(i, j++, v);
      ++i;
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
  }

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    if (i >= n_ || j >= n_) throw std::out_of_range("SquareMatrix index out of range");
    if (!std::isfinite(v)) throw std::invalid_argument("SquareMatrix entries must be finite");
    entries_[i * n_ + j] = v;
  }

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

/// Determinant by Gaussian elimination with partial pivoting. Singular -> 0.
inline double determinant(const SquareMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (a[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = -det;
    }
    const double p = a[col * n + col];
    det *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / p;
      if (f == 0.0) continue;
      for (std::size_t j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
    }
  }
  return det;
}

}  // namespace berezin
