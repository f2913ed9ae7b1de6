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

#include <span>
#include <vector>

#include "wfcheck/qcore/layout.h"
#include "wfcheck/qcore/linalg.h"

namespace wfcheck {

/// Normalized pure state over a layout.
class StateVector {
 public:
  StateVector() = default;
  /// Throws Error if the length does not match the layout or the squared
  /// norm differs from 1 by more than `tol`.
  StateVector(SpaceLayout layout, std::vector<Complex> amplitudes,
              double tol = kDefaultTolerance);

  /// Computational basis state |index>.
  static StateVector basis_state(SpaceLayout layout, std::size_t index);
  /// Rescales `amplitudes` to unit norm; throws Error on a zero vector.
  static StateVector normalized(SpaceLayout layout, std::vector<Complex> amplitudes);

  const SpaceLayout& layout() const { return layout_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  /// max_i |a_i - b_i|; layouts must be equal.
  double distance(const StateVector& other) const;
  /// Distance minimized over a global phase.
  double distance_up_to_phase(const StateVector& other) const;

  bool operator==(const StateVector&) const = default;

 private:
  SpaceLayout layout_;
  std::vector<Complex> amplitudes_;
};

/// Unit-trace Hermitian operator. Positivity is not checked on construction
/// (O(d^3)); use is_positive_semidefinite().
class DensityMatrix {
 public:
  DensityMatrix() = default;
  DensityMatrix(SpaceLayout layout, Matrix entries, double tol = kDefaultTolerance);

  static DensityMatrix pure(const StateVector& s);
  /// sum_k w_k |s_k><s_k|; weights must sum to 1.
  static DensityMatrix mixture(std::span<const double> weights,
                               std::span<const StateVector> states);

  const SpaceLayout& layout() const { return layout_; }
  const Matrix& entries() const { return entries_; }
  std::size_t dimension() const { return entries_.rows(); }

  std::vector<double> eigenvalues() const;
  bool is_positive_semidefinite(double tol = kDefaultTolerance) const;
  /// Tr(rho^2).
  double purity() const;
  double distance(const DensityMatrix& other) const;

 private:
  SpaceLayout layout_;
  Matrix entries_;
};

class Unitary {
 public:
  Unitary() = default;
  /// Throws Error unless U^dagger U = I within `tol`.
  Unitary(SpaceLayout layout, Matrix entries, double tol = kDefaultTolerance);

  static Unitary identity(SpaceLayout layout);

  const SpaceLayout& layout() const { return layout_; }
  const Matrix& entries() const { return entries_; }
  std::size_t dimension() const { return entries_.rows(); }

 private:
  SpaceLayout layout_;
  Matrix entries_;
};

}  // namespace wfcheck
