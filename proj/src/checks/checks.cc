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

#include "wfcheck/checks/checks.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "wfcheck/qcore/ops.h"
#include "wfcheck/scenario/presets.h"

namespace wfcheck::checks {

using interpret::Engine;
using interpret::FactHolderPolicy;
using interpret::JointDistribution;
using interpret::RuleSet;
namespace presets = scenario::presets;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "consistent";
    case Verdict::kContradiction:
      return "contradiction";
    case Verdict::kAmbiguity:
      return "ambiguity";
  }
  return "?";
}

double Finding::value(const std::string& rule) const {
  for (const auto& v : values) {
    if (v.rule == rule) return v.value;
  }
  throw Error("finding '" + claim + "' has no value for '" + rule + "'");
}

const Finding& ContradictionReport::finding(const std::string& claim) const {
  for (const auto& f : findings) {
    if (f.claim == claim) return f;
  }
  throw Error("report has no finding '" + claim + "'");
}

double ContradictionReport::max_discrepancy() const {
  double m = 0.0;
  for (const auto& f : findings) m = std::max(m, f.discrepancy);
  return m;
}

namespace {

Verdict contradiction_if_any(const ContradictionReport& r) {
  return r.max_discrepancy() > r.tolerance ? Verdict::kContradiction : Verdict::kConsistent;
}

Outcome L(double v) { return {Label(v)}; }

}  // namespace

// ------------------------------------------------------------------- CPL

ContradictionReport cpl_probability_check(const std::vector<Complex>& c, std::size_t r_a) {
  const std::size_t d = c.size();
  if (d < 2) throw Error("need at least two coefficients");
  if (std::abs(norm_squared(c) - 1.0) > kVerdictTolerance) throw Error("coefficients are not normalized");
  if (r_a >= d) throw Error("r_a = " + std::to_string(r_a) + " is not an index below " + std::to_string(d));

  // S, then S+APV after Alice's pre-measurement, then Bob's record entangled.
  const StateVector system(SpaceLayout({{"S", d}}), c, kVerdictTolerance);
  const StateVector apv0 = StateVector::basis_state(SpaceLayout({{"APV", d}}), 0);
  const StateVector b0 = StateVector::basis_state(SpaceLayout({{"B", d}}), 0);
  const std::array<StateVector, 2> s_apv{system, apv0};
  const StateVector for_b =
      apply_local(build_premeasurement(bases::computational("S", d), Subsystem{"APV", d}, Label(0)),
                  tensor(s_apv));
  const std::array<StateVector, 2> s_apv_b{for_b, b0};
  const StateVector bob_meas =
      apply_local(build_premeasurement(bases::computational("APV", d), Subsystem{"B", d}, Label(0)),
                  tensor(s_apv_b));

  const Distribution rb = born_distribution(bob_meas, ObservableSpec::single(bases::computational("B", d)));
  double born = 0.0;
  double closed = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == r_a) continue;
    born += rb.probabilities[j];
    closed += std::norm(c[j]);
  }

  const std::vector<std::string> alice{"APV"};
  const double alice_shift = partial_trace(for_b, alice).distance(partial_trace(bob_meas, alice));

  // Same question through the scenario engine.
  const Label ra_label(static_cast<double>(r_a));
  const Engine rqm5(presets::cpl(c), RuleSet::rqm5());
  const double engine_wrong = 1.0 - rqm5.predicted_distribution("rb", {{"ra", {ra_label}}}).probability({ra_label});
  const Engine cpl(presets::cpl(c), RuleSet::rqm5_cpl());
  const double cpl_wrong = 1.0 - cpl.predicted_distribution("rb", {{"ra", {ra_label}}}).probability({ra_label});

  ContradictionReport r;
  r.check = "cpl";
  r.rules = {"rqm5", "cpl"};
  Parameter re{"c_re", {}, {}}, im{"c_im", {}, {}};
  for (const auto& x : c) {
    re.values.push_back(x.real());
    im.values.push_back(x.imag());
  }
  r.parameters = {re, im, {"r_a", {static_cast<double>(r_a)}, {}}};
  r.findings.push_back({"P(r_b != r_a)",
                        {{"rqm5", born}, {"closed_form", closed}, {"rqm5_engine", engine_wrong}, {"cpl", cpl_wrong}},
                        std::abs(born - cpl_wrong)});
  r.findings.push_back({"Alice's reduced state is unchanged by Bob's interaction", {{"max_deviation", alice_shift}},
                        alice_shift});
  r.verdict = contradiction_if_any(r);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "Bob faces the entangled S+APV state and reads APV by a unitary that leaves Alice's reduced "
                "state untouched. Born's rule then gives P(r_b != r_a) = %.12g, while cross-perspective links "
                "require %.12g.",
                born, cpl_wrong);
  r.narrative = buf;
  return r;
}

// ------------------------------------------------------------------- EPR

namespace {

double p_equal(const JointDistribution& j) {
  double p = 0.0;
  for (std::size_t k = 0; k < j.rows.size(); ++k) {
    if (j.rows[k][0] == j.rows[k][1]) p += j.probabilities[k];
  }
  return p;
}

}  // namespace

ContradictionReport epr_correlation_check(double c0, double c1) {
  if (!std::isfinite(c0) || !std::isfinite(c1)) throw Error("coefficients must be finite");
  if (std::abs(c0 * c0 + c1 * c1 - 1.0) > kVerdictTolerance) throw Error("coefficients are not normalized");
  if (std::abs(c0) <= kSchmidtDistinctness || std::abs(c1) <= kSchmidtDistinctness) {
    throw Error("degenerate preparation: a Schmidt coefficient is zero");
  }
  const StateVector pair(SpaceLayout({{"P1", 2}, {"P2", 2}}), {c0, 0.0, 0.0, c1}, kVerdictTolerance);
  const std::vector<std::string> left{"P1"}, right{"P2"};
  const SchmidtDecomposition sd = schmidt(pair, left, right);
  if (!sd.unique || sd.coefficients.size() != 2) {
    throw Error("equal Schmidt coefficients: the decomposition is not unique");
  }

  const std::vector<std::string> names{"ra", "rb"};
  const Engine orthodox(presets::epr(c0, c1, presets::EprPartition::kNone), RuleSet::orthodox());
  const Engine separate(presets::epr(c0, c1, presets::EprPartition::kSeparate), RuleSet::rqm5());
  const Engine joint(presets::epr(c0, c1, presets::EprPartition::kJoint), RuleSet::rqm5());
  const double p_orth = p_equal(orthodox.joint_distribution(names));
  const double p_sep = p_equal(separate.joint_distribution(names));
  const double p_joint = p_equal(joint.joint_distribution(names));

  const Distribution plain = separate.predicted_distribution("rb");
  double deviation = 0.0;
  for (int v = 0; v < 2; ++v) {
    const Distribution cond = separate.predicted_distribution("rb", {{"ra", L(v)}});
    for (std::size_t k = 0; k < plain.size(); ++k) {
      deviation = std::max(deviation, std::abs(cond.probabilities[k] - plain.probabilities[k]));
    }
  }

  ContradictionReport r;
  r.check = "epr";
  r.rules = {"orthodox", "rqm5"};
  r.parameters = {{"c", {c0, c1}, {}}, {"p", {c0 * c0, c1 * c1}, {}}};
  r.findings.push_back({"P(r_a = r_b)",
                        {{"orthodox", p_orth}, {"rqm5_separate", p_sep}, {"rqm5_joint", p_joint}},
                        std::abs(p_joint - p_sep)});
  r.findings.push_back({"conditioning on r_a leaves P(r_b) unchanged under rqm5",
                        {{"max_deviation", deviation}},
                        deviation});
  const bool split = std::abs(p_joint - p_sep) > r.tolerance;
  r.verdict = split ? Verdict::kAmbiguity : Verdict::kConsistent;
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "Orthodox collapse correlates the two results (P = %.12g). Under RQM-5 the answer depends on "
                "whether Alice and Bob are separate fact holders (P = %.12g) or one joint system (P = %.12g).",
                p_orth, p_sep, p_joint);
  r.narrative = buf;
  return r;
}

// ------------------------------------------------------------------- GHZ

std::vector<ParityConstraint> ghz_constraints_full() {
  return {
      {{{"B1"}, {"B2"}, {"B3"}}, 1, "all pairs in basis 2"},
      {{{"B1"}, {"A2"}, {"A3"}}, -1, "pair 1 in basis 2, records 2 and 3 in basis 3"},
      {{{"A1"}, {"B2"}, {"A3"}}, -1, "pair 2 in basis 2, records 1 and 3 in basis 3"},
      {{{"A1"}, {"A2"}, {"B3"}}, -1, "pair 3 in basis 2, records 1 and 2 in basis 3"},
  };
}

std::vector<ParityConstraint> ghz_constraints_substituted() {
  // B_i -> -A_j*A_k.
  auto b = [](const char* j, const char* k) {
    return std::vector<SignedSymbol>{{j, true}, {k, false}};
  };
  auto cat = [](std::vector<std::vector<SignedSymbol>> parts) {
    std::vector<SignedSymbol> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const SignedSymbol& x, const SignedSymbol& y) { return x.name < y.name; });
    return out;
  };
  const auto b1 = b("A2", "A3");
  const auto b2 = b("A1", "A3");
  const auto b3 = b("A1", "A2");
  return {
      {cat({b1, b2, b3}), 1, "all pairs in basis 2"},
      {cat({b1, {{"A2"}, {"A3"}}}), -1, "pair 1 in basis 2, records 2 and 3 in basis 3"},
      {cat({{{"A1"}}, b2, {{"A3"}}}), -1, "pair 2 in basis 2, records 1 and 3 in basis 3"},
      {cat({{{"A1"}, {"A2"}}, b3}), -1, "pair 3 in basis 2, records 1 and 2 in basis 3"},
  };
}

namespace {

std::array<bool, 3> context_mask(int pair) {
  // pair < 0: all basis 2; otherwise only `pair` in basis 2.
  if (pair < 0) return {true, true, true};
  std::array<bool, 3> m{false, false, false};
  m[static_cast<std::size_t>(pair)] = true;
  return m;
}

std::vector<std::string> context_names(const std::array<bool, 3>& mask) {
  std::vector<std::string> out;
  for (int m = 0; m < 3; ++m) out.push_back((mask[m] ? "b" : "r") + std::to_string(m + 1));
  return out;
}

std::string context_label(const std::array<bool, 3>& mask) {
  std::string out = "(";
  for (int m = 0; m < 3; ++m) {
    if (m) out += ", ";
    out += (mask[m] ? "B" : "A") + std::to_string(m + 1);
  }
  return out + ")";
}

// Mass of rows whose +-1 product equals `want`; symbolic labels never match.
double parity_mass(const JointDistribution& j, int want) {
  double p = 0.0;
  for (std::size_t k = 0; k < j.rows.size(); ++k) {
    double prod = 1.0;
    bool numeric = true;
    for (const auto& o : j.rows[k]) {
      if (!o.front().is_number()) {
        numeric = false;
        break;
      }
      prod *= o.front().value();
    }
    if (numeric && prod == want) p += j.probabilities[k];
  }
  return p;
}

}  // namespace

ContradictionReport ghz_check(FactHolderPolicy policy) {
  ContradictionReport r;
  r.check = "ghz";
  r.rules = {"rqm5", "cpl"};
  r.parameters = {{"policy", {}, interpret::policy_name(policy)}};

  // Quantum parities of the four contexts.
  double identity_violation = 0.0;
  double pin_conflict_min = 1.0;
  double pin_conflict_max = 0.0;
  for (int pair = -1; pair < 3; ++pair) {
    const auto mask = context_mask(pair);
    const auto names = context_names(mask);
    const Engine e(presets::ghz_context(mask), RuleSet::rqm5(policy));
    const JointDistribution j = e.joint_distribution(names);
    const int want = pair < 0 ? 1 : -1;
    const double p = parity_mass(j, want);
    std::string claim = "context " + context_label(mask) + ": P(product = " + (want > 0 ? "+1" : "-1") + ")";
    r.findings.push_back({claim, {{"rqm5", p}}, std::abs(1.0 - p)});
    if (pair < 0) continue;

    // B_i = -A_j*A_k on every branch with weight, using Wigner's readouts.
    for (std::size_t k = 0; k < j.rows.size(); ++k) {
      if (j.probabilities[k] <= 1e-12) continue;
      double prod = 1.0;
      bool numeric = true;
      for (const auto& o : j.rows[k]) {
        numeric = numeric && o.front().is_number();
        if (numeric) prod *= o.front().value();
      }
      if (!numeric || prod != -1.0) identity_violation += j.probabilities[k];
    }

    // Cross-perspective links pin Wigner's readouts to Alice's facts.
    const Engine pinned(presets::ghz_context(mask), RuleSet::rqm5_cpl(policy));
    double conflict = 0.0;
    for (const auto& b : pinned.branches().branches) {
      if (!b.conflicts.empty()) conflict += b.probability;
    }
    pin_conflict_min = std::min(pin_conflict_min, conflict);
    pin_conflict_max = std::max(pin_conflict_max, conflict);
  }
  r.findings.push_back({"branchwise B_i = -A_j*A_k with Wigner's readouts", {{"rqm5", identity_violation}},
                        identity_violation});
  r.findings.push_back({"readouts pinned to Alice's facts have zero Born weight",
                        {{"rqm5", 0.0}, {"cpl_min", pin_conflict_min}, {"cpl_max", pin_conflict_max}},
                        pin_conflict_max});

  AssignmentSearchResult search = parity_search(ghz_constraints_substituted());
  const AssignmentSearchResult full = parity_search(ghz_constraints_full());
  const double found = static_cast<double>(search.satisfying.size());
  r.findings.push_back({"+-1 values of A1, A2, A3 satisfying all four constraints",
                        {{"cpl_required", 1.0},
                         {"found", found},
                         {"domain", static_cast<double>(search.domain_size)},
                         {"found_with_free_B", static_cast<double>(full.satisfying.size())},
                         {"domain_with_free_B", static_cast<double>(full.domain_size)}},
                        found > 0 ? 0.0 : 1.0});
  r.verdict = contradiction_if_any(r);
  std::string product = search.formal_product
                            ? "(" + search.formal_product->monomial() + ")^2 = " +
                                  std::to_string(search.formal_product->square) + ", so " +
                                  search.formal_product->monomial() + " = " + search.formal_product->value()
                            : "a consistent assignment exists";
  r.narrative =
      "Each context is an exact run from the same post-interaction state. Quantum mechanics fixes the four "
      "parities with certainty. If Wigner's readouts must reproduce Alice's relative facts, those facts would "
      "have to satisfy all four parities at once, and no +-1 assignment does: " +
      product + ".";
  r.search = std::move(search);
  return r;
}

}  // namespace wfcheck::checks
