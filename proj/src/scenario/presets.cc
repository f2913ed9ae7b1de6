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

#include "wfcheck/scenario/presets.h"

#include <string>

namespace wfcheck::scenario::presets {
namespace {

BasisDecl preset_basis(std::string name, BasisPreset preset) {
  BasisDecl b;
  b.name = std::move(name);
  b.preset = preset;
  b.dims = preset_dims(preset);
  return b;
}

Event event(EventBody body) { return {std::move(body), {}}; }

Event interact(std::string agent, std::string target, std::string basis, std::string record,
               std::string result) {
  return event(Interact{std::move(agent), {std::move(target)}, std::move(basis), std::move(record),
                        std::move(result)});
}

}  // namespace

Scenario epr(double c0, double c1, EprPartition partition) {
  Scenario s;
  s.name = "epr";
  s.systems = {{"P1", 2, {}}, {"P2", 2, {}}};
  s.agents = {{"Alice", {{"RA", 2, Label(0), ""}}, {}}, {"Bob", {{"RB", 2, Label(0), ""}}, {}}};
  s.bases = {preset_basis("Z", BasisPreset::kBasis1)};
  Prepare prep;
  prep.state.kind = StateKind::kSchmidt;
  prep.state.coefficients = {c0, c1};
  prep.targets = {"P1", "P2"};
  s.timeline.push_back(event(prep));
  if (partition == EprPartition::kSeparate) {
    s.timeline.push_back(event(DeclarePartition{"separate", {{"P1"}, {"P2"}}}));
  } else if (partition == EprPartition::kJoint) {
    s.timeline.push_back(event(DeclarePartition{"joint", {{"P1", "P2"}}}));
  }
  s.timeline.push_back(interact("Alice", "P1", "Z", "RA", "ra"));
  s.timeline.push_back(interact("Bob", "P2", "Z", "RB", "rb"));
  return s;
}

Scenario cpl(const std::vector<Complex>& c) {
  const std::size_t d = c.size();
  Scenario s;
  s.name = "cpl";
  s.systems = {{"S", d, {}}};
  s.agents = {{"Alice", {{"APV", d, Label(0), "Z"}}, {}}};
  s.observers = {{"Bob", {}}};
  BasisDecl z = preset_basis("Z", BasisPreset::kBasis1);
  z.dims = {d};
  s.bases = {z};
  Prepare prep;
  prep.state.kind = StateKind::kAmplitudes;
  prep.state.amplitudes = c;
  prep.targets = {"S"};
  s.timeline.push_back(event(prep));
  s.timeline.push_back(interact("Alice", "S", "Z", "APV", "ra"));
  s.timeline.push_back(event(ReadRecord{"Bob", "APV", "", "rb", false}));
  return s;
}

Scenario ghz_context(const std::array<bool, 3>& basis2) {
  Scenario s;
  s.name = "ghz";
  AgentDecl alice{"Alice", {}, {}};
  for (int m = 1; m <= 3; ++m) {
    const std::string k = std::to_string(m);
    s.systems.push_back({"S" + k, 2, {}});
    alice.records.push_back({"A" + k, 2, Label(1), "Y"});
  }
  s.agents = {alice};
  s.observers = {{"Wigner", {}}};
  s.bases = {preset_basis("Y", BasisPreset::kBasis3), preset_basis("P", BasisPreset::kBasis2)};
  Prepare prep;
  prep.state.kind = StateKind::kGhz;
  prep.targets = {"S1", "S2", "S3"};
  s.timeline.push_back(event(prep));
  for (int m = 1; m <= 3; ++m) {
    const std::string k = std::to_string(m);
    s.timeline.push_back(interact("Alice", "S" + k, "Y", "A" + k, "a" + k));
  }
  for (int m = 1; m <= 3; ++m) {
    const std::string k = std::to_string(m);
    const bool concurrent = m > 1;
    if (basis2[m - 1]) {
      s.timeline.push_back(event(Measure{"Wigner", {"S" + k, "A" + k}, {"P"}, false, "b" + k, concurrent}));
    } else {
      s.timeline.push_back(event(ReadRecord{"Wigner", "A" + k, "", "r" + k, concurrent}));
    }
  }
  return s;
}

Scenario ghz() { return ghz_context({true, true, true}); }

}  // namespace wfcheck::scenario::presets
