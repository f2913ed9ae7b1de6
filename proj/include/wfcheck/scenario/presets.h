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

// Programmatic builders for the canonical scenarios shipped in scenarios/.

#include <array>
#include <vector>

#include "wfcheck/scenario/scenario.h"

namespace wfcheck::scenario::presets {

enum class EprPartition { kNone, kSeparate, kJoint };

/// Two photons in schmidt(c0, c1); Alice and Bob each make an RQM
/// measurement of their photon in the Schmidt basis (results ra, rb).
Scenario epr(double c0, double c1, EprPartition partition = EprPartition::kSeparate);

/// System S = sum_j c_j |V_j>, Alice pre-measures it into APV (result ra),
/// Bob reads APV in its pointer basis (result rb).
Scenario cpl(const std::vector<Complex>& c);

/// GHZ on S1..S3, Alice pre-measures each qubit in basis-3 into A1..A3
/// (results a1..a3), Wigner measures every (S_m, A_m) pair in basis-2
/// (results b1..b3).
Scenario ghz();

/// Same preparation and interactions as ghz(); afterwards pair m is measured
/// in basis-2 (result b<m>) when `basis2[m]` is set, otherwise Wigner reads
/// record A<m> in its basis-3 pointer basis (result r<m>).
Scenario ghz_context(const std::array<bool, 3>& basis2);

}  // namespace wfcheck::scenario::presets
