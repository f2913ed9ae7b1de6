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

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "wfcheck/qcore/linalg.h"

namespace wfcheck {

/// Outcome label: either a real number or a symbol. Numbers order before
/// symbols.
class Label {
 public:
  Label() = default;
  Label(double value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Label(int value) : value_(value) {}     // NOLINT(google-explicit-constructor)
  static Label symbol(std::string name);

  bool is_number() const { return symbol_.empty(); }
  bool is_symbol() const { return !symbol_.empty(); }
  double value() const;  // throws Error for symbols
  const std::string& name() const { return symbol_; }

  /// Canonical text: numbers with up to 17 significant digits, symbols verbatim.
  std::string str() const;

  std::partial_ordering operator<=>(const Label& other) const;
  bool operator==(const Label& other) const = default;

 private:
  double value_ = 0.0;
  std::string symbol_;
};

using Outcome = std::vector<Label>;
std::string to_string(const Outcome& outcome);

/// Orthonormal basis of the space of `targets` (big-endian over the target
/// order). Row k of vectors() is the k-th basis vector, labelled labels()[k].
class BasisSpec {
 public:
  BasisSpec() = default;
  /// Throws Error unless the vectors are orthonormal within `tol`, span the
  /// whole target space, and labels are distinct.
  BasisSpec(std::vector<std::string> targets, std::vector<std::size_t> dims, Matrix vectors,
            std::vector<Label> labels, double tol = kDefaultTolerance);

  const std::vector<std::string>& targets() const { return targets_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const Matrix& vectors() const { return vectors_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t dimension() const { return vectors_.cols(); }
  std::span<const Complex> vector(std::size_t k) const { return vectors_.row(k); }

  /// Index of `label`; throws Error if absent.
  std::size_t index_of(const Label& label) const;

  BasisSpec bound_to(std::vector<std::string> targets) const;
  BasisSpec with_labels(std::vector<Label> labels) const;

 private:
  std::vector<std::string> targets_;
  std::vector<std::size_t> dims_;
  Matrix vectors_;
  std::vector<Label> labels_;
};

/// Tensor product basis; the first factor is most significant.
BasisSpec tensor(std::span<const BasisSpec> factors);

namespace bases {

/// |0>,...,|d-1> labelled 0..d-1.
BasisSpec computational(std::string target, std::size_t dim);
/// Qubit computational basis with the +1/-1 eigenvalue convention:
/// |+1> = |0>, |-1> = |1>.
BasisSpec basis1(std::string target);
/// |+-1> = (|+1> +- i|-1>)/sqrt2 in terms of basis1.
BasisSpec basis3(std::string target);
/// Pair basis on (system, record): |+-1> = (|+1,+1> +- i|-1,-1>)/sqrt2 in
/// basis3 products, completed by |+1,-1> (off0) and |-1,+1> (off1).
BasisSpec basis2(std::string system, std::string record);

}  // namespace bases

}  // namespace wfcheck
