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

// Exhaustive +-1 assignment search for systems of parity constraints.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfcheck/qcore/kernels.h"

namespace wfcheck::checks {

inline constexpr std::size_t kMaxParityVariables = 20;

struct SignedSymbol {
  std::string name;
  bool negated = false;

  bool operator==(const SignedSymbol&) const = default;
};

/// Product of `symbols` (repeats allowed) must equal `required`.
struct ParityConstraint {
  std::vector<SignedSymbol> symbols;
  int required = 1;
  std::string provenance;

  /// e.g. "-A2*A3*A1 = +1".
  std::string str() const;
};

/// Formal consequence of an inconsistent system: for the certificate subset
/// every variable occurs an even number of times, so the product of its left
/// sides is a perfect square H^2 with H = prod var^(count/2), and H^2 equals
/// the product of the right sides.
struct FormalProduct {
  std::vector<std::pair<std::string, int>> half_monomial;  // variable, exponent
  int square = 1;
  std::vector<std::size_t> certificate;  // constraint indices

  /// "A1*A2*A3".
  std::string monomial() const;
  /// "+-i" when square is -1, "+-1" otherwise.
  std::string value() const;
};

struct AssignmentSearchResult {
  std::vector<std::string> variables;  // order of first appearance
  std::uint64_t domain_size = 0;
  std::vector<std::vector<int>> satisfying;  // +-1 per variable, ascending bit order
  std::optional<FormalProduct> formal_product;  // set iff no assignment exists
};

/// Throws Error for more than kMaxParityVariables variables or a required
/// product other than +-1.
AssignmentSearchResult parity_search(const std::vector<ParityConstraint>& constraints,
                                     kernels::Exec exec = kernels::Exec::kAuto);

namespace detail {

/// Bit k of an assignment set means variable k is -1. Constraint c holds iff
/// popcount(a & masks[c]) is odd exactly when odd[c].
std::vector<std::uint32_t> satisfying_serial(const std::vector<std::uint32_t>& masks,
                                             const std::vector<bool>& odd, std::size_t n);
std::vector<std::uint32_t> satisfying_parallel(const std::vector<std::uint32_t>& masks,
                                               const std::vector<bool>& odd, std::size_t n);

}  // namespace detail

}  // namespace wfcheck::checks
