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

#include "wfcheck/cli/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "wfcheck/checks/checks.h"
#include "wfcheck/interpret/engine.h"
#include "wfcheck/scenario/language.h"

#ifndef WFCHECK_VERSION
#define WFCHECK_VERSION "0.0.0"
#endif

namespace wfcheck::cli {

using json = nlohmann::ordered_json;
using interpret::Engine;
using interpret::FactHolderPolicy;
using interpret::RuleSet;

const char* version() { return WFCHECK_VERSION; }

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string format = "text";
  bool timing = false;
  std::string policy = "agent-only";
  // parse / run
  std::string path;
  bool canonical = false;
  std::string rules;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tolerance = kDefaultTolerance;
  // check
  std::string check;
  std::vector<double> probabilities;
  std::optional<std::size_t> ra;
};

FactHolderPolicy parse_policy(const std::string& s) {
  if (s == "agent-only") return FactHolderPolicy::kAgentOnly;
  if (s == "both-parties") return FactHolderPolicy::kBothParties;
  throw Failure{kExitUsage, "unknown policy '" + s + "' (agent-only or both-parties)"};
}

std::string read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw Failure{kExitIo, path + ": cannot read file"};
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  if (!in && !in.eof()) throw Failure{kExitIo, path + ": read error"};
  return s.str();
}

scenario::Scenario load(const std::string& path, std::ostream& err) {
  const std::string text = read_file(path);
  try {
    return scenario::parse(text);
  } catch (const scenario::ParseError& e) {
    for (const auto& d : e.diagnostics()) err << path << (d.pos.line > 0 ? ":" : ": ") << d.str() << "\n";
    throw Failure{kExitUsage, ""};
  }
}

json label_json(const Label& l) {
  if (l.is_symbol()) return l.name();
  const double v = l.value();
  if (std::abs(v) < 1e15 && v == std::floor(v)) return static_cast<std::int64_t>(v);
  return v;
}

json outcome_json(const Outcome& o) {
  json a = json::array();
  for (const auto& l : o) a.push_back(label_json(l));
  return a;
}

std::string outcome_text(const Outcome& o) {
  std::string s;
  for (std::size_t k = 0; k < o.size(); ++k) {
    if (k) s += ",";
    s += o[k].is_symbol() ? o[k].name() : format_number(o[k].value());
  }
  return s;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

// ------------------------------------------------------------------ parse

struct Report {
  json result;
  std::string text;
  int code = kExitOk;
};

Report cmd_parse(const Options& o, std::ostream& err) {
  const scenario::Scenario s = load(o.path, err);
  Report r;
  r.result = {{"kind", "parse"},
              {"scenario", s.name},
              {"valid", true},
              {"systems", s.systems.size()},
              {"agents", s.agents.size()},
              {"observers", s.observers.size()},
              {"events", s.timeline.size()}};
  std::ostringstream t;
  if (o.canonical) {
    const std::string c = scenario::print(s);
    r.result["canonical"] = c;
    t << c;
  } else {
    t << o.path << ": ok, scenario " << s.name << ", " << s.systems.size() << " systems, " << s.timeline.size()
      << " events\n";
  }
  r.text = t.str();
  return r;
}

// -------------------------------------------------------------------- run

double chi_square(const std::vector<std::size_t>& counts, const std::vector<double>& p, std::size_t n,
                  std::size_t* dof) {
  double x = 0.0;
  std::size_t cells = 0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] <= 0.0) continue;
    const double e = p[k] * static_cast<double>(n);
    x += (static_cast<double>(counts[k]) - e) * (static_cast<double>(counts[k]) - e) / e;
    ++cells;
  }
  *dof = cells > 0 ? cells - 1 : 0;
  return x;
}

Report cmd_run(const Options& o, std::ostream& err) {
  const auto rules_opt = interpret::parse_rules(o.rules);
  if (!rules_opt) throw Failure{kExitUsage, "unknown rule set '" + o.rules + "' (orthodox, rqm5 or cpl)"};
  RuleSet rules = *rules_opt;
  rules.policy = parse_policy(o.policy);
  if (!(o.tolerance > 0.0)) throw Failure{kExitUsage, "--tolerance must be positive"};
  const scenario::Scenario s = load(o.path, err);
  interpret::EngineOptions eo;
  eo.tolerance = o.tolerance;
  eo.fallback_seed = o.seed;
  const Engine e(s, rules, eo);

  std::vector<std::string> names;
  std::vector<std::size_t> events;
  for (std::size_t k = 0; k < s.timeline.size(); ++k) {
    const std::string n = scenario::bound_result(s.timeline[k]);
    if (!n.empty()) {
      names.push_back(n);
      events.push_back(k);
    }
  }

  const interpret::BranchSet bs = e.branches();
  double conflict_mass = 0.0;
  std::map<std::tuple<std::size_t, std::string, std::string>, double> conflicts;
  for (const auto& b : bs.branches) {
    if (!b.conflicts.empty()) conflict_mass += b.probability;
    for (const auto& c : b.conflicts) conflicts[{c.event, c.kind, c.holder}] += b.probability;
  }

  Report r;
  std::ostringstream t;
  r.result = {{"kind", "run"},
              {"scenario", s.name},
              {"rules", rules.name()},
              {"policy", interpret::policy_name(rules.policy)},
              {"tolerance", o.tolerance},
              {"exact", bs.exact},
              {"branches", bs.branches.size()}};
  t << "scenario: " << s.name << "\n"
    << "rules: " << rules.name() << " (" << interpret::policy_name(rules.policy) << ")\n"
    << "tolerance: " << format_number(o.tolerance) << "\n"
    << "branches: " << bs.branches.size() << (bs.exact ? " (exact)" : " (sampled)") << "\n";

  std::size_t width = 6;
  for (const auto& n : names) width = std::max(width, n.size() + 2);

  json dists = json::array();
  std::vector<Distribution> exact;
  t << "\ndistributions\n";
  for (std::size_t k = 0; k < names.size(); ++k) {
    exact.push_back(e.predicted_distribution(names[k]));
    const std::string who = scenario::performer(s.timeline[events[k]]);
    json rows = json::array();
    t << "  " << names[k] << " (" << who << ", event " << events[k] + 1 << ")\n";
    for (std::size_t j = 0; j < exact.back().size(); ++j) {
      rows.push_back({{"outcome", outcome_json(exact.back().outcomes[j])},
                      {"probability", exact.back().probabilities[j]}});
      t << "    " << pad(outcome_text(exact.back().outcomes[j]), width) << format_number(exact.back().probabilities[j])
        << "\n";
    }
    dists.push_back({{"name", names[k]}, {"event", events[k] + 1}, {"performer", who}, {"distribution", rows}});
  }
  r.result["distributions"] = dists;

  if (!names.empty()) {
    const interpret::JointDistribution j = e.joint_distribution(names);
    json rows = json::array();
    t << "\njoint\n  ";
    for (const auto& n : names) t << pad(n, width);
    t << "probability\n";
    for (std::size_t k = 0; k < j.rows.size(); ++k) {
      json row = json::array();
      t << "  ";
      for (const auto& oc : j.rows[k]) {
        row.push_back(outcome_json(oc));
        t << pad(outcome_text(oc), width);
      }
      t << format_number(j.probabilities[k]) << "\n";
      rows.push_back({{"outcomes", row}, {"probability", j.probabilities[k]}});
    }
    r.result["joint"] = {{"names", names}, {"rows", rows}};

    json pairs = json::array();
    if (names.size() > 1) t << "\npairwise P(x = y)\n";
    for (std::size_t a = 0; a < names.size(); ++a) {
      for (std::size_t b = a + 1; b < names.size(); ++b) {
        double p = 0.0;
        for (std::size_t k = 0; k < j.rows.size(); ++k) {
          if (j.rows[k][a] == j.rows[k][b]) p += j.probabilities[k];
        }
        pairs.push_back({{"x", names[a]}, {"y", names[b]}, {"p_equal", p}});
        t << "  " << pad(names[a], width) << pad(names[b], width) << format_number(p) << "\n";
      }
    }
    r.result["pairwise"] = pairs;
  }

  json cj = json::array();
  t << "\nconflict mass: " << format_number(conflict_mass) << "\n";
  for (const auto& [key, mass] : conflicts) {
    const auto& [event, kind, holder] = key;
    cj.push_back({{"event", event + 1}, {"kind", kind}, {"holder", holder}, {"probability", mass}});
    t << "  event " << event + 1 << " " << kind << " (" << holder << "): " << format_number(mass) << "\n";
  }
  r.result["conflict_mass"] = conflict_mass;
  r.result["conflicts"] = cj;

  // One seeded run: the ledger of relative facts.
  const interpret::RunResult one = e.run(o.seed);
  json ledger = json::array();
  t << "\nrun (seed " << o.seed << ")\n";
  for (const auto& no : one.outcomes) t << "  " << pad(no.name, width) << outcome_text(no.outcome) << "\n";
  t << "ledger\n";
  for (const auto& le : one.ledger.entries()) {
    ledger.push_back({{"event", le.event + 1},
                      {"holder", le.holder},
                      {"observable", le.observable},
                      {"outcome", outcome_json(le.outcome)}});
    t << "  event " << le.event + 1 << "  " << pad(le.holder, width) << pad(le.observable, width)
      << outcome_text(le.outcome) << "\n";
  }
  json outcomes = json::object();
  for (const auto& no : one.outcomes) outcomes[no.name] = outcome_json(no.outcome);
  json pins = json::array();
  for (const auto& p : one.pins) {
    t << "pin: event " << p.event + 1 << " " << p.result << " = " << p.pinned.str() << " (Born "
      << format_number(p.born_probability) << ")\n";
    pins.push_back({{"event", p.event + 1},
                    {"result", p.result},
                    {"pinned", label_json(p.pinned)},
                    {"born_probability", p.born_probability}});
  }
  r.result["run"] = {{"outcomes", outcomes}, {"ledger", ledger}, {"pins", pins}};

  if (o.samples > 0) {
    std::mt19937_64 rng(o.seed);
    std::vector<std::vector<std::size_t>> counts(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) counts[k].assign(exact[k].size(), 0);
    for (std::size_t n = 0; n < o.samples; ++n) {
      const interpret::RunResult rr = e.run(rng, o.seed);
      for (std::size_t k = 0; k < names.size(); ++k) {
        const Outcome& oc = rr.outcome(names[k]);
        const auto it = std::find(exact[k].outcomes.begin(), exact[k].outcomes.end(), oc);
        if (it == exact[k].outcomes.end()) throw Error("sampled outcome outside the exact support");
        ++counts[k][static_cast<std::size_t>(it - exact[k].outcomes.begin())];
      }
    }
    json sj = json::array();
    t << "\nsamples: " << o.samples << "\n";
    for (std::size_t k = 0; k < names.size(); ++k) {
      json rows = json::array();
      t << "  " << names[k] << "\n";
      for (std::size_t j = 0; j < exact[k].size(); ++j) {
        const double f = static_cast<double>(counts[k][j]) / static_cast<double>(o.samples);
        rows.push_back({{"outcome", outcome_json(exact[k].outcomes[j])},
                        {"count", counts[k][j]},
                        {"frequency", f},
                        {"expected", exact[k].probabilities[j]}});
        t << "    " << pad(outcome_text(exact[k].outcomes[j]), width) << pad(std::to_string(counts[k][j]), 10)
          << pad(format_number(f), 16) << format_number(exact[k].probabilities[j]) << "\n";
      }
      std::size_t dof = 0;
      const double x = chi_square(counts[k], exact[k].probabilities, o.samples, &dof);
      t << "    chi-square " << format_number(x) << " (dof " << dof << ")\n";
      sj.push_back({{"name", names[k]}, {"counts", rows}, {"chi_square", x}, {"dof", dof}});
    }
    r.result["samples"] = {{"n", o.samples}, {"results", sj}};
  }

  r.code = conflict_mass > 0.0 ? kExitFound : kExitOk;
  r.text = t.str();
  return r;
}

// ------------------------------------------------------------------ check

json report_json(const checks::ContradictionReport& c, const std::vector<double>& probabilities) {
  json params = json::object();
  if (!probabilities.empty()) params["p"] = probabilities;
  for (const auto& p : c.parameters) {
    if (p.text.empty()) {
      params[p.name] = p.values;
    } else {
      params[p.name] = p.text;
    }
  }
  json findings = json::array();
  for (const auto& f : c.findings) {
    json values = json::object();
    for (const auto& v : f.values) values[v.rule] = v.value;
    findings.push_back({{"claim", f.claim}, {"values", values}, {"discrepancy", f.discrepancy}});
  }
  json j = {{"kind", "check"},
            {"check", c.check},
            {"rules", c.rules},
            {"parameters", params},
            {"findings", findings},
            {"verdict", checks::verdict_name(c.verdict)},
            {"tolerance", c.tolerance},
            {"narrative", c.narrative}};
  if (c.search) {
    json s = {{"variables", c.search->variables},
              {"constraints", json::array()},
              {"domain_size", c.search->domain_size},
              {"satisfying", c.search->satisfying}};
    for (const auto& k : checks::ghz_constraints_substituted()) s["constraints"].push_back(k.str());
    if (c.search->formal_product) {
      const auto& f = *c.search->formal_product;
      s["formal_product"] = {{"monomial", f.monomial()},
                             {"square", f.square},
                             {"value", f.value()},
                             {"certificate", f.certificate}};
    }
    j["search"] = s;
  }
  return j;
}

std::string report_text(const checks::ContradictionReport& c, const std::vector<double>& probabilities) {
  std::ostringstream t;
  auto list = [](const std::vector<double>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + format_number(v[k]);
    return s;
  };
  t << "check: " << c.check << "\n";
  t << "rules:";
  for (const auto& r : c.rules) t << " " << r;
  t << "\nparameters\n";
  if (!probabilities.empty()) t << "  p = " << list(probabilities) << "\n";
  for (const auto& p : c.parameters) t << "  " << p.name << " = " << (p.text.empty() ? list(p.values) : p.text) << "\n";
  t << "findings\n";
  for (const auto& f : c.findings) {
    t << "  " << f.claim << "\n";
    for (const auto& v : f.values) t << "    " << pad(v.rule, 20) << format_number(v.value) << "\n";
    t << "    " << pad("discrepancy", 20) << format_number(f.discrepancy) << "\n";
  }
  if (c.search) {
    t << "assignment search\n  variables:";
    for (const auto& v : c.search->variables) t << " " << v;
    t << "\n";
    for (const auto& k : checks::ghz_constraints_substituted()) t << "  " << k.str() << "\n";
    t << "  satisfying: " << c.search->satisfying.size() << " of " << c.search->domain_size << "\n";
    if (c.search->formal_product) {
      const auto& f = *c.search->formal_product;
      t << "  certificate:";
      for (std::size_t c : f.certificate) t << " " << c;
      t << "\n";
      t << "  product: (" << f.monomial() << ")^2 = " << f.square << ", " << f.monomial() << " = " << f.value()
        << "\n";
    }
  }
  t << "verdict: " << checks::verdict_name(c.verdict) << " (tolerance " << format_number(c.tolerance) << ")\n";
  t << c.narrative << "\n";
  return t.str();
}

Report cmd_check(const Options& o) {
  const FactHolderPolicy policy = parse_policy(o.policy);
  for (double p : o.probabilities) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw Failure{kExitUsage, "--c takes probabilities in [0, 1]"};
  }
  checks::ContradictionReport c;
  std::vector<double> probs = o.probabilities;
  try {
    if (o.check == "cpl") {
      if (probs.empty()) probs = {0.3, 0.7};
      std::vector<Complex> amp;
      for (double p : probs) amp.emplace_back(std::sqrt(p), 0.0);
      c = checks::cpl_probability_check(amp, o.ra.value_or(probs.size() - 1));
    } else if (o.check == "epr") {
      if (o.ra) throw Failure{kExitUsage, "--ra applies to the cpl check only"};
      if (probs.empty()) probs = {0.3, 0.7};
      if (probs.size() != 2) throw Failure{kExitUsage, "epr takes two probabilities"};
      c = checks::epr_correlation_check(std::sqrt(probs[0]), std::sqrt(probs[1]));
    } else if (o.check == "ghz") {
      if (o.ra || !probs.empty()) throw Failure{kExitUsage, "ghz takes no state parameters"};
      c = checks::ghz_check(policy);
    } else {
      throw Failure{kExitUsage, "unknown check '" + o.check + "' (epr, cpl or ghz)"};
    }
  } catch (const Error& e) {
    throw Failure{kExitUsage, e.what()};
  }
  Report r;
  r.result = report_json(c, o.check == "ghz" ? std::vector<double>{} : probs);
  r.text = report_text(c, o.check == "ghz" ? std::vector<double>{} : probs);
  r.code = c.verdict == checks::Verdict::kConsistent ? kExitOk : kExitFound;
  return r;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Wigner's-friend scenario simulator and consistency checker", "wfcheck"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", o.timing, "Include wall-clock timing");
  };

  CLI::App* parse = app.add_subcommand("parse", "Parse and validate a scenario file");
  parse->add_option("file", o.path, "Scenario file")->required();
  parse->add_flag("--canonical", o.canonical, "Print the canonical form");
  common(parse);

  CLI::App* run = app.add_subcommand("run", "Evaluate a scenario under a rule set");
  run->add_option("file", o.path, "Scenario file")->required();
  run->add_option("--rules", o.rules, "orthodox, rqm5 or cpl")->required();
  run->add_option("--seed", o.seed, "Seed for the recorded run and the samples");
  run->add_option("--samples", o.samples, "Number of sampled runs (0: exact only)");
  run->add_option("--tolerance", o.tolerance, "Numerical tolerance");
  run->add_option("--policy", o.policy, "agent-only or both-parties");
  common(run);

  CLI::App* check = app.add_subcommand("check", "Run a named consistency check");
  check->add_option("name", o.check, "epr, cpl or ghz")->required();
  check->add_option("--c", o.probabilities, "Probabilities |c_j|^2, comma separated")->delimiter(',');
  check->add_option("--ra", o.ra, "Alice's outcome index (cpl)");
  check->add_option("--policy", o.policy, "agent-only or both-parties");
  common(check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "wfcheck: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  std::string command;
  try {
    if (parse->parsed()) {
      command = "parse";
      r = cmd_parse(o, err);
    } else if (run->parsed()) {
      command = "run";
      r = cmd_run(o, err);
    } else {
      command = "check";
      r = cmd_check(o);
    }
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "wfcheck: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "wfcheck: " << e.what() << "\n";
    return kExitUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.format == "json") {
    json doc = {{"tool", "wfcheck"},
                {"version", version()},
                {"command", command},
                {"invocation", args},
                {"seed", command == "run" ? json(o.seed) : json(nullptr)},
                {"exit_code", r.code},
                {"result", r.result}};
    if (o.timing) doc["timing"] = {{"elapsed_ms", ms}};
    out << doc.dump(2) << "\n";
  } else {
    out << r.text;
    if (o.timing) out << "elapsed: " << format_number(ms) << " ms\n";
  }
  return r.code;
}

}  // namespace wfcheck::cli
