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

// Executes a Scenario under orthodox collapse, RQM-5 relative facts, or
// RQM-5 with cross-perspective links.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wfcheck/qcore/ops.h"
#include "wfcheck/scenario/scenario.h"

namespace wfcheck::interpret {

using scenario::Scenario;

enum class FactHolderPolicy { kAgentOnly, kBothParties };

struct RuleSet {
  enum class Kind { kOrthodox, kRqm5, kRqm5Cpl };

  Kind kind = Kind::kOrthodox;
  FactHolderPolicy policy = FactHolderPolicy::kAgentOnly;

  static RuleSet orthodox() { return {Kind::kOrthodox, FactHolderPolicy::kAgentOnly}; }
  static RuleSet rqm5(FactHolderPolicy p = FactHolderPolicy::kAgentOnly) { return {Kind::kRqm5, p}; }
  static RuleSet rqm5_cpl(FactHolderPolicy p = FactHolderPolicy::kAgentOnly) {
    return {Kind::kRqm5Cpl, p};
  }

  /// "orthodox", "rqm5" or "cpl".
  std::string name() const;
  bool operator==(const RuleSet&) const = default;
};

/// Accepts "orthodox", "rqm5", "cpl" (alias "rqm5cpl").
std::optional<RuleSet> parse_rules(const std::string& name);
const char* policy_name(FactHolderPolicy p);

struct LedgerEntry {
  std::size_t event = 0;
  std::string holder;      // agent, observer, or target system (both-parties policy)
  std::string observable;  // basis names, '*'-joined
  Outcome outcome;

  bool operator==(const LedgerEntry&) const = default;
};

/// Append-only list of relative facts; at most one entry per (event, holder).
class RelativeFactLedger {
 public:
  /// Throws Error on a second entry for the same (event, holder).
  void append(LedgerEntry entry);
  const std::vector<LedgerEntry>& entries() const { return entries_; }
  const LedgerEntry* find(std::size_t event, const std::string& holder) const;

  bool operator==(const RelativeFactLedger&) const = default;

 private:
  std::vector<LedgerEntry> entries_;
};

/// A ReadRecord forced to the ledger value under cross-perspective links.
/// `born_probability` is what the reader's own state assigns to the pinned
/// value; 1 - born_probability is the weight the pin overrides.
struct PinOverride {
  std::size_t event = 0;
  std::string result;
  Label pinned;
  double born_probability = 0.0;

  double override_weight() const { return 1.0 - born_probability; }
  bool operator==(const PinOverride&) const = default;
};

/// A rule application with no consistent quantum continuation.
struct Conflict {
  std::size_t event = 0;
  std::string kind;    // "cpl pin" or "fact holder"
  std::string holder;
  std::string detail;

  bool operator==(const Conflict&) const = default;
};

struct NamedOutcome {
  std::string name;
  std::size_t event = 0;
  Outcome outcome;

  bool operator==(const NamedOutcome&) const = default;
};

struct RunResult {
  RuleSet rules;
  std::uint64_t seed = 0;
  RelativeFactLedger ledger;
  std::vector<NamedOutcome> outcomes;  // timeline order
  std::map<std::string, StateVector> perspectives;  // every agent and observer
  std::vector<PinOverride> pins;
  std::vector<Conflict> conflicts;

  /// Outcome bound to `name`; throws Error if absent.
  const Outcome& outcome(const std::string& name) const;
  bool operator==(const RunResult&) const = default;
};

struct PerspectiveState {
  std::string observer;
  std::optional<StateVector> pure;  // set when every branch gives the same ray
  DensityMatrix state;
  std::vector<std::string> knowledge;  // results the observer conditions on
};

/// Result name -> required outcome.
using Conditioning = std::map<std::string, Outcome>;

/// One leaf of the branch enumeration.
struct Branch {
  double probability = 0.0;
  std::map<std::string, Outcome> outcomes;
  std::vector<PinOverride> pins;
  std::vector<Conflict> conflicts;
};

struct BranchSet {
  std::vector<Branch> branches;
  bool exact = true;  // false when the Monte Carlo fallback was used
};

struct JointDistribution {
  std::vector<std::string> names;
  std::vector<std::vector<Outcome>> rows;  // one Outcome per name
  std::vector<double> probabilities;

  double probability(const std::vector<Outcome>& row) const;
  double total() const;
};

struct EngineOptions {
  double tolerance = kDefaultTolerance;
  double prune = 1e-14;           // branches lighter than this are dropped
  double pin_floor = 1e-12;       // pins below this Born weight are conflicts
  std::size_t max_branches = 1000000;
  std::size_t fallback_samples = 100000;
  std::uint64_t fallback_seed = 0;
  kernels::Exec exec = kernels::Exec::kAuto;
};

class Engine {
 public:
  /// Throws Error unless validate(s) is empty and concurrent groups commute.
  Engine(Scenario s, RuleSet rules, EngineOptions options = {});
  ~Engine();
  Engine(Engine&&) noexcept;
  Engine& operator=(Engine&&) noexcept;

  const Scenario& scenario() const;
  const RuleSet& rules() const;

  RunResult run(std::uint64_t seed) const;
  RunResult run(std::mt19937_64& rng, std::uint64_t seed_label) const;
  /// `n` runs drawn from one generator seeded with `seed`.
  std::vector<RunResult> sample(std::size_t n, std::uint64_t seed) const;

  /// Leaves after the first `events` timeline events (default: all).
  BranchSet branches(std::optional<std::size_t> events = std::nullopt) const;

  /// Outcomes an event can report, in canonical order.
  std::vector<Outcome> possible_outcomes(const std::string& result) const;

  Distribution predicted_distribution(const std::string& result, const Conditioning& c = {}) const;
  JointDistribution joint_distribution(const std::vector<std::string>& results,
                                       const Conditioning& c = {}) const;

  /// State `observer` faces after timeline event `after_event` (-1: before
  /// any event), mixed over the branches compatible with `c`.
  PerspectiveState perspective(const std::string& observer, long after_event,
                               const Conditioning& c = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

RunResult run(const Scenario& s, const RuleSet& r, std::uint64_t seed);
Distribution predicted_distribution(const Scenario& s, const RuleSet& r, const std::string& result,
                                    const Conditioning& c = {});
JointDistribution joint_distribution(const Scenario& s, const RuleSet& r,
                                     const std::vector<std::string>& results, const Conditioning& c = {});
PerspectiveState perspective(const Scenario& s, const RuleSet& r, const std::string& observer,
                             long after_event, const Conditioning& c = {});

}  // namespace wfcheck::interpret
