// Copyright 2026 The wfcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wfcheck {

using Complex = std::complex<double>;

/// Absolute tolerance used by every numeric comparison unless overridden.
inline constexpr double kDefaultTolerance = 1e-10;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Complex> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  Matrix adjoint() const;
  Complex trace() const;

  /// Largest entrywise modulus of (this - other); shapes must agree.
  double max_abs_diff(const Matrix& other) const;
  bool is_hermitian(double tol = kDefaultTolerance) const;
  bool is_unitary(double tol = kDefaultTolerance) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>
double norm_squared(std::span<const Complex> v);

/// Eigenvalues of a Hermitian matrix in ascending order.
std::vector<double> hermitian_eigenvalues(const Matrix& m);

struct SvdResult {
  std::vector<double> singular_values;  // descending
  Matrix left;                          // columns are left singular vectors
  Matrix right;                         // columns are right singular vectors
};
SvdResult svd(const Matrix& m);

}  // namespace wfcheck
