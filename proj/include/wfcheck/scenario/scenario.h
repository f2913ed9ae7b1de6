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

// Declarative model of a Wigner-Friend experiment: subsystems, agents with
// record registers, outside observers, named bases and a totally ordered
// timeline of events.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wfcheck/qcore/basis.h"
#include "wfcheck/qcore/layout.h"

namespace wfcheck::scenario {

/// 1-based source position. Positions never take part in AST equality.
struct SourcePos {
  std::size_t line = 0;
  std::size_t column = 0;

  bool operator==(const SourcePos&) const { return true; }
};

struct SystemDecl {
  std::string id;
  std::size_t dim = 2;
  SourcePos pos;

  bool operator==(const SystemDecl&) const = default;
};

struct RecordDecl {
  std::string id;
  std::size_t dim = 2;
  Label init{0};
  std::string pointer;  // basis name; empty = computational basis

  bool operator==(const RecordDecl&) const = default;
};

struct AgentDecl {
  std::string name;
  std::vector<RecordDecl> records;
  SourcePos pos;

  bool operator==(const AgentDecl&) const = default;
};

struct ObserverDecl {
  std::string name;
  SourcePos pos;

  bool operator==(const ObserverDecl&) const = default;
};

enum class BasisPreset { kBasis1, kBasis2, kBasis3, kRaw };

struct BasisDecl {
  std::string name;
  BasisPreset preset = BasisPreset::kBasis1;
  std::vector<std::size_t> dims;             // always filled in
  std::vector<std::vector<Complex>> vectors;  // kRaw only
  std::vector<Label> labels;                  // empty = preset default
  SourcePos pos;

  bool operator==(const BasisDecl&) const = default;
};

/// Default dimensions of a preset (basis1: {2}, basis2: {2,2}, basis3: {2}).
std::vector<std::size_t> preset_dims(BasisPreset preset);
const char* preset_name(BasisPreset preset);

enum class StateKind { kGhz, kSchmidt, kAmplitudes };

struct StateExpr {
  StateKind kind = StateKind::kAmplitudes;
  std::vector<double> coefficients;  // kSchmidt
  std::vector<Complex> amplitudes;   // kAmplitudes

  bool operator==(const StateExpr&) const = default;
};

struct Prepare {
  StateExpr state;
  std::vector<std::string> targets;

  bool operator==(const Prepare&) const = default;
};

/// RQM measurement: a pre-measurement of `targets` in `basis` written into
/// `record`, producing a relative fact for `agent`.
struct Interact {
  std::string agent;
  std::vector<std::string> targets;
  std::string basis;
  std::string record;
  std::string result;  // optional name of the ledger entry

  bool operator==(const Interact&) const = default;
};

/// Ordinary measurement by an observer. Several bases form a product
/// observable; targets are consumed factor by factor.
struct Measure {
  std::string observer;
  std::vector<std::string> targets;
  std::vector<std::string> bases;
  bool encode_bits = false;
  std::string result;
  bool concurrent = false;

  bool operator==(const Measure&) const = default;
};

/// Measurement of an agent's record; `basis` empty = the record's pointer
/// basis.
struct ReadRecord {
  std::string observer;
  std::string record;
  std::string basis;
  std::string result;
  bool concurrent = false;

  bool operator==(const ReadRecord&) const = default;
};

struct DeclarePartition {
  std::string name;
  std::vector<std::vector<std::string>> groups;

  bool operator==(const DeclarePartition&) const = default;
};

using EventBody = std::variant<Prepare, Interact, Measure, ReadRecord, DeclarePartition>;

struct Event {
  EventBody body;
  SourcePos pos;

  bool operator==(const Event&) const = default;
};

/// Name of the event kind ("prepare", "interact", ...).
const char* event_keyword(const Event& e);
/// Result name bound by the event, or empty.
std::string bound_result(const Event& e);
/// Agent or observer performing the event, or empty.
std::string performer(const Event& e);

struct Scenario {
  std::string name;
  std::vector<SystemDecl> systems;
  std::vector<AgentDecl> agents;
  std::vector<ObserverDecl> observers;
  std::vector<BasisDecl> bases;
  std::vector<Event> timeline;
  SourcePos pos;

  bool operator==(const Scenario&) const = default;

  /// Systems in declaration order followed by every agent's records.
  /// Throws Error on duplicate ids or bad dimensions.
  SpaceLayout layout() const;

  const SystemDecl* find_system(const std::string& id) const;
  const AgentDecl* find_agent(const std::string& name) const;
  const ObserverDecl* find_observer(const std::string& name) const;
  const BasisDecl* find_basis(const std::string& name) const;
  /// Record and its owner, or nulls.
  std::pair<const AgentDecl*, const RecordDecl*> find_record(const std::string& id) const;
  /// Index of the event binding `result`, if any.
  std::optional<std::size_t> find_result(const std::string& result) const;
};

}  // namespace wfcheck::scenario
