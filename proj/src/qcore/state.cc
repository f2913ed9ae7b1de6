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

#include "wfcheck/qcore/state.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace wfcheck {

StateVector::StateVector(SpaceLayout layout, std::vector<Complex> amplitudes, double tol)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total_dimension()) {
    throw Error("state has " + std::to_string(amplitudes_.size()) + " amplitudes, layout needs " +
                std::to_string(layout_.total_dimension()));
  }
  const double n2 = norm_squared(amplitudes_);
  if (std::abs(n2 - 1.0) > tol) {
    throw Error("state is not normalized (squared norm " + std::to_string(n2) + ")");
  }
}

StateVector StateVector::basis_state(SpaceLayout layout, std::size_t index) {
  std::vector<Complex> amps(layout.total_dimension());
  if (index >= amps.size()) throw Error("basis index out of range");
  amps[index] = 1.0;
  return StateVector(std::move(layout), std::move(amps));
}

StateVector StateVector::normalized(SpaceLayout layout, std::vector<Complex> amplitudes) {
  const double n = std::sqrt(norm_squared(amplitudes));
  if (n == 0.0) throw Error("cannot normalize the zero vector");
  for (auto& a : amplitudes) a /= n;
  return StateVector(std::move(layout), std::move(amplitudes));
}

double StateVector::norm() const { return std::sqrt(norm_squared(amplitudes_)); }

double StateVector::distance(const StateVector& other) const {
  if (!(layout_ == other.layout_)) throw Error("comparing states over different layouts");
  double worst = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes_[i] - other.amplitudes_[i]));
  }
  return worst;
}

double StateVector::distance_up_to_phase(const StateVector& other) const {
  const Complex overlap = inner(other.amplitudes_, amplitudes_);
  const double mag = std::abs(overlap);
  const Complex phase = mag > 0.0 ? overlap / mag : Complex{1.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    worst = std::max(worst, std::abs(amplitudes_[i] - phase * other.amplitudes_[i]));
  }
  return worst;
}

DensityMatrix::DensityMatrix(SpaceLayout layout, Matrix entries, double tol)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  const std::size_t d = layout_.total_dimension();
  if (entries_.rows() != d || entries_.cols() != d) throw Error("density matrix shape mismatch");
  if (!entries_.is_hermitian(tol)) throw Error("density matrix is not Hermitian");
  const Complex tr = entries_.trace();
  if (std::abs(tr - Complex{1.0}) > tol) throw Error("density matrix trace is not 1");
}

DensityMatrix DensityMatrix::pure(const StateVector& s) {
  const std::size_t d = s.dimension();
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(r, c) = s[r] * std::conj(s[c]);
  }
  return DensityMatrix(s.layout(), std::move(m));
}

DensityMatrix DensityMatrix::mixture(std::span<const double> weights,
                                     std::span<const StateVector> states) {
  if (weights.size() != states.size() || states.empty()) throw Error("bad mixture");
  const SpaceLayout& layout = states.front().layout();
  const std::size_t d = layout.total_dimension();
  Matrix m(d, d);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!(states[k].layout() == layout)) throw Error("mixture over different layouts");
    if (weights[k] < 0.0) throw Error("negative mixture weight");
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) m(r, c) += weights[k] * states[k][r] * std::conj(states[k][c]);
    }
  }
  return DensityMatrix(layout, std::move(m));
}

std::vector<double> DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(entries_); }

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  const auto values = eigenvalues();
  return std::all_of(values.begin(), values.end(), [tol](double v) { return v >= -tol; });
}

double DensityMatrix::purity() const {
  double acc = 0.0;
  for (const Complex& x : entries_.data()) acc += std::norm(x);
  return acc;
}

double DensityMatrix::distance(const DensityMatrix& other) const {
  if (!(layout_ == other.layout_)) throw Error("comparing density matrices over different layouts");
  return entries_.max_abs_diff(other.entries_);
}

Unitary::Unitary(SpaceLayout layout, Matrix entries, double tol)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
  const std::size_t d = layout_.total_dimension();
  if (entries_.rows() != d || entries_.cols() != d) throw Error("unitary shape mismatch");
  if (!entries_.is_unitary(tol)) throw Error("matrix is not unitary");
}

Unitary Unitary::identity(SpaceLayout layout) {
  const std::size_t d = layout.total_dimension();
  return Unitary(std::move(layout), Matrix::identity(d));
}

}  // namespace wfcheck
