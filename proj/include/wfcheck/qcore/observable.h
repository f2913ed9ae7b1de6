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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wfcheck/qcore/basis.h"

namespace wfcheck {

struct ObservableFactor {
  BasisSpec basis;
  /// Eigenvalue per label. Empty means "numeric labels are their own
  /// eigenvalues".
  std::map<Label, double> eigenvalues;

  double eigenvalue(const Label& label) const;
};

/// A single-basis or product observable, optionally with a bijective
/// relabelling of its joint outcomes.
class ObservableSpec {
 public:
  ObservableSpec() = default;

  static ObservableSpec single(BasisSpec basis);
  /// Throws Error if two factors share a subsystem.
  static ObservableSpec product(std::vector<BasisSpec> factors);

  const std::vector<ObservableFactor>& factors() const { return factors_; }
  bool is_product() const { return factors_.size() > 1; }
  const std::optional<std::map<Outcome, Label>>& encoding() const { return encoding_; }

  /// All targets, factor by factor.
  std::vector<std::string> targets() const;
  /// Tensor product of the factor bases over targets().
  BasisSpec joint_basis() const;

  /// Raw (un-encoded) joint outcomes, big-endian over factors.
  std::vector<Outcome> raw_outcomes() const;
  /// Reported outcomes: the raw tuples or their single encoded labels.
  std::vector<Outcome> outcomes() const;
  Outcome report(const Outcome& raw) const;
  /// Inverse of report(); throws Error for unknown outcomes.
  Outcome raw(const Outcome& reported) const;

  /// Product of factor eigenvalues of a raw outcome.
  double eigenvalue(const Outcome& raw) const;

  void set_eigenvalues(std::size_t factor, std::map<Label, double> eigenvalues);

 private:
  friend ObservableSpec relabel(const ObservableSpec& o, const std::map<Outcome, Label>& map);

  std::vector<ObservableFactor> factors_;
  std::optional<std::map<Outcome, Label>> encoding_;
};

/// Attaches a relabelling. `map` must be a bijection from the raw outcome set
/// onto distinct labels; throws Error otherwise.
ObservableSpec relabel(const ObservableSpec& o, const std::map<Outcome, Label>& map);

struct BitEncoding {
  std::vector<int> bits;  // b_n with x_n = (-1)^{b_n}
  std::uint64_t value = 0;  // sum_n 2^{n-1} b_n (n counted from 1)
};

/// Maps a +-1 tuple to bits (+1 -> 0, -1 -> 1) and their integer value.
/// Throws Error for entries other than +-1.
BitEncoding encode_bits(std::span<const int> signs);

/// The relabelling (x_1..x_n) -> v of encode_bits for an observable whose
/// factors all have exactly the two labels +1 and -1.
std::map<Outcome, Label> bit_encoding_map(const ObservableSpec& o);

}  // namespace wfcheck
