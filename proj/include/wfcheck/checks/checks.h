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

// The three contradiction analyzers and their structured report.

#include <optional>
#include <string>
#include <vector>

#include "wfcheck/checks/parity.h"
#include "wfcheck/interpret/engine.h"

namespace wfcheck::checks {

/// Discrepancies at or below this are treated as agreement.
inline constexpr double kVerdictTolerance = 1e-9;

enum class Verdict { kConsistent, kContradiction, kAmbiguity };
const char* verdict_name(Verdict v);

struct RuleValue {
  std::string rule;  // rule set or reference quantity
  double value = 0.0;
};

struct Finding {
  std::string claim;
  std::vector<RuleValue> values;
  double discrepancy = 0.0;

  /// Value reported for `rule`; throws Error if absent.
  double value(const std::string& rule) const;
};

struct Parameter {
  std::string name;
  std::vector<double> values;  // numeric parameters
  std::string text;            // non-numeric parameters
};

struct ContradictionReport {
  std::string check;
  std::vector<std::string> rules;
  std::vector<Parameter> parameters;
  std::vector<Finding> findings;
  Verdict verdict = Verdict::kConsistent;
  std::string narrative;
  std::optional<AssignmentSearchResult> search;
  double tolerance = kVerdictTolerance;

  const Finding& finding(const std::string& claim) const;
  /// Largest discrepancy over all findings.
  double max_discrepancy() const;
};

/// Bob reads Alice's pointer after her pre-measurement of S = sum_j c_j |V_j>.
/// Throws Error for unnormalized `c` or an out-of-range `r_a`.
ContradictionReport cpl_probability_check(const std::vector<Complex>& c, std::size_t r_a);

/// P(r_a = r_b) for the two-photon state c0|00> + c1|11> under orthodox
/// collapse and RQM-5 with separate or joint fact holders. Throws Error
/// unless c is normalized with distinct nonzero magnitudes.
ContradictionReport epr_correlation_check(double c0, double c1);

/// GHZ construction with the four basis-2/basis-3 contexts and the
/// +-1 assignment search.
ContradictionReport ghz_check(interpret::FactHolderPolicy policy = interpret::FactHolderPolicy::kAgentOnly);

/// The four GHZ parity constraints with B_i replaced by -A_j*A_k.
std::vector<ParityConstraint> ghz_constraints_substituted();
/// The four GHZ parity constraints over B1..B3, A1..A3.
std::vector<ParityConstraint> ghz_constraints_full();

}  // namespace wfcheck::checks
