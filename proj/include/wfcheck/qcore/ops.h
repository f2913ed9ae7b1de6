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
#include <string>
#include <utility>
#include <vector>

#include "wfcheck/qcore/basis.h"
#include "wfcheck/qcore/kernels.h"
#include "wfcheck/qcore/observable.h"
#include "wfcheck/qcore/state.h"

namespace wfcheck {

/// Outcome distribution in observable order.
struct Distribution {
  std::vector<Outcome> outcomes;
  std::vector<double> probabilities;

  std::size_t size() const { return outcomes.size(); }
  /// 0 for outcomes not listed.
  double probability(const Outcome& outcome) const;
  double total() const;
};

// Tensor products over concatenated layouts; throws Error on duplicate ids.
StateVector tensor(std::span<const StateVector> states);
Unitary tensor(std::span<const Unitary> unitaries);

/// sum_k c_k |s_k>; all layouts equal, result must be normalized.
StateVector superpose(std::span<const Complex> coefficients, std::span<const StateVector> states,
                      double tol = kDefaultTolerance);

/// Throws Error if the layouts differ.
StateVector apply(const Unitary& u, const StateVector& s,
                  kernels::Exec exec = kernels::Exec::kAuto);
/// Applies `u`, whose layout names a subset of s's subsystems, to those
/// subsystems only.
StateVector apply_local(const Unitary& u, const StateVector& s,
                        kernels::Exec exec = kernels::Exec::kAuto);
/// Extends `u` by identity on the rest of `layout`.
Unitary embed(const Unitary& u, const SpaceLayout& layout);

/// Born distribution of `m` on `s` (marginal over untested subsystems).
/// Throws Error if s is not normalized within `tol` or a target is unknown.
Distribution born_distribution(const StateVector& s, const ObservableSpec& m,
                               double tol = kDefaultTolerance,
                               kernels::Exec exec = kernels::Exec::kAuto);

/// Post-measurement state for a reported outcome. Throws Error if the
/// outcome has probability <= `tol`.
StateVector project(const StateVector& s, const ObservableSpec& m, const Outcome& outcome,
                    double tol = kDefaultTolerance, kernels::Exec exec = kernels::Exec::kAuto);

/// Reduced state on `keep` (listed order). Throws Error for an empty set.
DensityMatrix partial_trace(const StateVector& s, std::span<const std::string> keep,
                            kernels::Exec exec = kernels::Exec::kAuto);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep,
                            kernels::Exec exec = kernels::Exec::kAuto);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // descending, strictly positive
  std::vector<StateVector> left;
  std::vector<StateVector> right;
  bool unique = false;

  /// sum_k lambda_k |L_k>|R_k> over the (left ++ right) layout.
  std::vector<Complex> reassemble() const;
};

/// Coefficients are treated as distinct when they differ by more than this.
inline constexpr double kSchmidtDistinctness = 1e-8;

/// Schmidt decomposition across (left | right), which must partition the
/// layout. Coefficients <= `tol` are dropped.
SchmidtDecomposition schmidt(const StateVector& s, std::span<const std::string> left,
                             std::span<const std::string> right, double tol = kDefaultTolerance);

/// Pre-measurement coupling the measured basis to a record:
///   |b_j>|r_k> -> |b_j>|r_{(k - init + j) mod d}>
/// where r is the record's pointer basis and init its starting label. The
/// layout is measured.targets() followed by pointer.targets(). Throws Error if
/// the record has fewer states than the measured basis.
Unitary build_premeasurement(const BasisSpec& measured, const BasisSpec& pointer,
                             const Label& init);
/// Pointer basis = computational basis of `record`.
Unitary build_premeasurement(const BasisSpec& measured, const Subsystem& record,
                             const Label& init);

}  // namespace wfcheck
