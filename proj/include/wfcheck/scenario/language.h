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

// The `.wfs` text format. See docs/scenario-format.md for the grammar.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfcheck/qcore/linalg.h"
#include "wfcheck/scenario/scenario.h"

namespace wfcheck::scenario {

/// State literals whose squared norm is further than this from 1 are rejected.
inline constexpr double kLiteralNormTolerance = 1e-8;

struct Diagnostic {
  std::optional<std::size_t> event;  // timeline index, when the problem is an event
  SourcePos pos;
  std::string reason;                // short stable code, e.g. "unprepared target"
  std::string message;               // human-readable detail

  /// "line:col: reason: message" (position omitted when unknown).
  std::string str() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Syntax only: lexing, grammar, literal normalization. Throws ParseError.
Scenario parse_syntax(std::string_view source);

/// parse_syntax followed by validate(); throws ParseError carrying every
/// diagnostic when the scenario is not valid.
Scenario parse(std::string_view source);

/// Canonical text; parse(print(s)) == s for every valid s.
std::string print(const Scenario& s);

/// Every structural problem of `s`; empty iff the scenario is valid. Never
/// throws.
std::vector<Diagnostic> validate(const Scenario& s);

}  // namespace wfcheck::scenario
