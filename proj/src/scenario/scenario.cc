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

#include "wfcheck/scenario/scenario.h"

#include <type_traits>

namespace wfcheck::scenario {

std::vector<std::size_t> preset_dims(BasisPreset preset) {
  switch (preset) {
    case BasisPreset::kBasis1:
    case BasisPreset::kBasis3:
      return {2};
    case BasisPreset::kBasis2:
      return {2, 2};
    case BasisPreset::kRaw:
      return {};
  }
  return {};
}

const char* preset_name(BasisPreset preset) {
  switch (preset) {
    case BasisPreset::kBasis1:
      return "basis1";
    case BasisPreset::kBasis2:
      return "basis2";
    case BasisPreset::kBasis3:
      return "basis3";
    case BasisPreset::kRaw:
      return "raw";
  }
  return "?";
}

const char* event_keyword(const Event& e) {
  return std::visit(
      [](const auto& b) -> const char* {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Prepare>) return "prepare";
        if constexpr (std::is_same_v<T, Interact>) return "interact";
        if constexpr (std::is_same_v<T, Measure>) return "measure";
        if constexpr (std::is_same_v<T, ReadRecord>) return "read";
        if constexpr (std::is_same_v<T, DeclarePartition>) return "partition";
      },
      e.body);
}

std::string bound_result(const Event& e) {
  if (auto* i = std::get_if<Interact>(&e.body)) return i->result;
  if (auto* m = std::get_if<Measure>(&e.body)) return m->result;
  if (auto* r = std::get_if<ReadRecord>(&e.body)) return r->result;
  return {};
}

std::string performer(const Event& e) {
  if (auto* i = std::get_if<Interact>(&e.body)) return i->agent;
  if (auto* m = std::get_if<Measure>(&e.body)) return m->observer;
  if (auto* r = std::get_if<ReadRecord>(&e.body)) return r->observer;
  return {};
}

SpaceLayout Scenario::layout() const {
  std::vector<Subsystem> subs;
  for (const auto& sys : systems) subs.push_back({sys.id, sys.dim});
  for (const auto& a : agents) {
    for (const auto& r : a.records) subs.push_back({r.id, r.dim});
  }
  return SpaceLayout(std::move(subs));
}

const SystemDecl* Scenario::find_system(const std::string& id) const {
  for (const auto& s : systems) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const AgentDecl* Scenario::find_agent(const std::string& n) const {
  for (const auto& a : agents) {
    if (a.name == n) return &a;
  }
  return nullptr;
}

const ObserverDecl* Scenario::find_observer(const std::string& n) const {
  for (const auto& o : observers) {
    if (o.name == n) return &o;
  }
  return nullptr;
}

const BasisDecl* Scenario::find_basis(const std::string& n) const {
  for (const auto& b : bases) {
    if (b.name == n) return &b;
  }
  return nullptr;
}

std::pair<const AgentDecl*, const RecordDecl*> Scenario::find_record(const std::string& id) const {
  for (const auto& a : agents) {
    for (const auto& r : a.records) {
      if (r.id == id) return {&a, &r};
    }
  }
  return {nullptr, nullptr};
}

std::optional<std::size_t> Scenario::find_result(const std::string& result) const {
  if (result.empty()) return std::nullopt;
  for (std::size_t k = 0; k < timeline.size(); ++k) {
    if (bound_result(timeline[k]) == result) return k;
  }
  return std::nullopt;
}

}  // namespace wfcheck::scenario
