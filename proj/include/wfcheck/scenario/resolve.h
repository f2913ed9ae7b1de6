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

// Turns declarations of a Scenario into qcore objects.

#include <string>
#include <vector>

#include "wfcheck/qcore/basis.h"
#include "wfcheck/qcore/observable.h"
#include "wfcheck/qcore/state.h"
#include "wfcheck/scenario/scenario.h"

namespace wfcheck::scenario {

/// The declared basis with empty targets. Throws Error when the declaration
/// does not describe an orthonormal basis.
BasisSpec unbound_basis(const BasisDecl& d);

/// The named basis bound to `targets`. Throws Error on unknown names or
/// dimension mismatch.
BasisSpec resolve_basis(const Scenario& s, const std::string& name,
                        const std::vector<std::string>& targets);

/// Pointer basis of a record (its declared basis, or computational).
BasisSpec record_pointer(const Scenario& s, const std::string& record);

/// Observable of a Measure event (product over its bases, optionally
/// bit-encoded).
ObservableSpec resolve_observable(const Scenario& s, const Measure& m);

/// Basis actually used by a ReadRecord event.
BasisSpec resolve_read_basis(const Scenario& s, const ReadRecord& r);

/// Amplitudes of a state expression over targets of the given dimensions.
/// Throws Error on dimension mismatch.
std::vector<Complex> resolve_state(const StateExpr& e, const std::vector<std::size_t>& dims);

/// Squared norm of a state expression's amplitudes.
double state_norm_squared(const StateExpr& e);

/// Every system in |0>, every record in its init pointer state.
StateVector initial_state(const Scenario& s);

}  // namespace wfcheck::scenario
