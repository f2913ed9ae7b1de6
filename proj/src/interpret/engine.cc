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

#include "wfcheck/interpret/engine.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "wfcheck/qcore/kernels.h"
#include "wfcheck/scenario/language.h"
#include "wfcheck/scenario/resolve.h"

namespace wfcheck::interpret {

using namespace wfcheck::scenario;

std::string RuleSet::name() const {
  switch (kind) {
    case Kind::kOrthodox:
      return "orthodox";
    case Kind::kRqm5:
      return "rqm5";
    case Kind::kRqm5Cpl:
      return "cpl";
  }
  return "?";
}

std::optional<RuleSet> parse_rules(const std::string& name) {
  if (name == "orthodox") return RuleSet::orthodox();
  if (name == "rqm5") return RuleSet::rqm5();
  if (name == "cpl" || name == "rqm5cpl") return RuleSet::rqm5_cpl();
  return std::nullopt;
}

const char* policy_name(FactHolderPolicy p) {
  return p == FactHolderPolicy::kAgentOnly ? "agent-only" : "both-parties";
}

void RelativeFactLedger::append(LedgerEntry entry) {
  if (find(entry.event, entry.holder)) {
    throw Error("ledger already holds an entry for event " + std::to_string(entry.event) + " and '" +
                entry.holder + "'");
  }
  entries_.push_back(std::move(entry));
}

const LedgerEntry* RelativeFactLedger::find(std::size_t event, const std::string& holder) const {
  for (const auto& e : entries_) {
    if (e.event == event && e.holder == holder) return &e;
  }
  return nullptr;
}

const Outcome& RunResult::outcome(const std::string& name) const {
  for (const auto& o : outcomes) {
    if (o.name == name) return o.outcome;
  }
  throw Error("no result named '" + name + "'");
}

double JointDistribution::probability(const std::vector<Outcome>& row) const {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k] == row) return probabilities[k];
  }
  return 0.0;
}

double JointDistribution::total() const {
  double t = 0.0;
  for (double p : probabilities) t += p;
  return t;
}

namespace {

enum class StepKind { kPrepare, kInteract, kMeasure, kRead, kPartition };

struct Step {
  StepKind kind = StepKind::kPrepare;
  Unitary unitary;
  ObservableSpec observable;
  std::vector<Outcome> outcomes;  // canonical reported outcomes
  std::string performer;
  std::vector<std::string> targets;
  std::string record;
  std::string result;
  std::string observable_name;
  bool pointer_read = false;
  std::map<std::string, std::string> groups;  // partition: subsystem -> group key
};

// One evolving history: the unitary-only state plus every holder's view.
struct Path {
  double probability = 1.0;
  StateVector base;
  std::map<std::string, StateVector> views;
  std::map<std::string, std::string> alias;   // agent -> shared holder key
  std::map<std::string, std::string> groups;  // current partition
  std::map<std::string, std::size_t> written;  // record -> pointer index
  RelativeFactLedger ledger;
  std::vector<NamedOutcome> outcomes;
  std::vector<PinOverride> pins;
  std::vector<Conflict> conflicts;

  std::string key_of(const std::string& name) const {
    auto it = alias.find(name);
    return it == alias.end() ? name : it->second;
  }
  const StateVector& view(const std::string& name) const {
    auto it = views.find(key_of(name));
    return it == views.end() ? base : it->second;
  }
};

struct TooManyBranches {};

Unitary preparation_unitary(const SpaceLayout& layout, const std::vector<Complex>& psi) {
  const std::size_t n = psi.size();
  std::vector<std::vector<Complex>> cols;
  const double norm = std::sqrt(norm_squared(psi));
  std::vector<Complex> first(psi);
  for (auto& a : first) a /= norm;
  cols.push_back(std::move(first));
  for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
    std::vector<Complex> v(n);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& c : cols) {
        const Complex ip = inner(c, v);
        for (std::size_t i = 0; i < n; ++i) v[i] -= ip * c[i];
      }
    }
    const double nv = std::sqrt(norm_squared(v));
    if (nv < 1e-6) continue;
    for (auto& a : v) a /= nv;
    cols.push_back(std::move(v));
  }
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return Unitary(layout, std::move(m));
}

std::vector<Outcome> singletons(const BasisSpec& b) {
  std::vector<Outcome> out;
  for (const auto& l : b.labels()) out.push_back({l});
  return out;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += sep;
    out += xs[k];
  }
  return out;
}

bool overlaps(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  }
  return false;
}

// True when every projector of `a` commutes with every projector of `b`.
bool observables_commute(const SpaceLayout& full, const ObservableSpec& a, const ObservableSpec& b) {
  const auto ta = a.targets();
  const auto tb = b.targets();
  if (!overlaps(ta, tb)) return true;
  std::vector<std::string> ids = ta;
  for (const auto& t : tb) {
    if (std::find(ids.begin(), ids.end(), t) == ids.end()) ids.push_back(t);
  }
  const SpaceLayout local = full.subset(ids);
  const BasisSpec ja = a.joint_basis();
  const BasisSpec jb = b.joint_basis();
  const IndexSplit sa = split_indices(local, ja.targets());
  const IndexSplit sb = split_indices(local, jb.targets());
  const std::size_t d = local.total_dimension();
  std::vector<Complex> e(d), t1(d), t2(d), u1(d), u2(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(e.begin(), e.end(), Complex{});
    e[i] = 1.0;
    for (std::size_t x = 0; x < ja.size(); ++x) {
      for (std::size_t y = 0; y < jb.size(); ++y) {
        kernels::serial::project(jb.vector(y), sb, e, t1);
        kernels::serial::project(ja.vector(x), sa, t1, u1);
        kernels::serial::project(ja.vector(x), sa, e, t2);
        kernels::serial::project(jb.vector(y), sb, t2, u2);
        for (std::size_t k = 0; k < d; ++k) {
          if (std::abs(u1[k] - u2[k]) > 1e-10) return false;
        }
      }
    }
  }
  return true;
}

// Normalized post-measurement state; the caller guarantees nonzero weight.
StateVector collapse(const StateVector& s, const ObservableSpec& m, const Outcome& outcome,
                     kernels::Exec exec) {
  const BasisSpec joint = m.joint_basis();
  const auto all = m.raw_outcomes();
  const auto index =
      static_cast<std::size_t>(std::find(all.begin(), all.end(), m.raw(outcome)) - all.begin());
  std::vector<Complex> out(s.dimension());
  kernels::project(joint.vector(index), split_indices(s.layout(), joint.targets()), s.amplitudes(), out,
                   exec);
  return StateVector::normalized(s.layout(), std::move(out));
}

}  // namespace

struct Engine::Impl {
  Scenario s;
  RuleSet rules;
  EngineOptions options;
  SpaceLayout layout;
  StateVector initial;
  std::vector<Step> steps;
  std::vector<std::string> holders;  // agents then observers

  bool orthodox() const { return rules.kind == RuleSet::Kind::kOrthodox; }

  void compile() {
    layout = s.layout();
    initial = initial_state(s);
    for (const auto& a : s.agents) holders.push_back(a.name);
    for (const auto& o : s.observers) holders.push_back(o.name);
    for (const Event& ev : s.timeline) {
      Step st;
      st.result = bound_result(ev);
      st.performer = performer(ev);
      if (auto* p = std::get_if<Prepare>(&ev.body)) {
        st.kind = StepKind::kPrepare;
        st.targets = p->targets;
        const SpaceLayout sub = layout.subset(p->targets);
        std::vector<std::size_t> dims;
        for (const auto& sys : sub.subsystems()) dims.push_back(sys.dim);
        st.unitary = preparation_unitary(sub, resolve_state(p->state, dims));
      } else if (auto* i = std::get_if<Interact>(&ev.body)) {
        st.kind = StepKind::kInteract;
        st.targets = i->targets;
        st.record = i->record;
        st.observable_name = i->basis;
        const BasisSpec measured = resolve_basis(s, i->basis, i->targets);
        const auto [agent, rec] = s.find_record(i->record);
        st.unitary = build_premeasurement(measured, record_pointer(s, i->record), rec->init);
        st.observable = ObservableSpec::single(measured);
        st.outcomes = singletons(measured);
      } else if (auto* m = std::get_if<Measure>(&ev.body)) {
        st.kind = StepKind::kMeasure;
        st.targets = m->targets;
        st.observable_name = join(m->bases, "*");
        st.observable = resolve_observable(s, *m);
        st.outcomes = st.observable.outcomes();
      } else if (auto* r = std::get_if<ReadRecord>(&ev.body)) {
        st.kind = StepKind::kRead;
        st.record = r->record;
        st.targets = {r->record};
        const auto [agent, rec] = s.find_record(r->record);
        st.pointer_read = r->basis.empty() || r->basis == rec->pointer;
        const BasisSpec b = resolve_read_basis(s, *r);
        st.observable_name = r->basis.empty() ? (rec->pointer.empty() ? "pointer" : rec->pointer) : r->basis;
        st.observable = ObservableSpec::single(b);
        st.outcomes = singletons(b);
      } else if (auto* d = std::get_if<DeclarePartition>(&ev.body)) {
        st.kind = StepKind::kPartition;
        for (const auto& g : d->groups) {
          const std::string key = "{" + join(g, ",") + "}";
          for (const auto& id : g) st.groups[id] = key;
        }
      }
      steps.push_back(std::move(st));
    }
    check_concurrency();
  }

  void check_concurrency() const {
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.timeline.size(); ++k) {
      const bool concurrent = k < s.timeline.size() && [&] {
        const auto& body = s.timeline[k].body;
        if (auto* m = std::get_if<Measure>(&body)) return m->concurrent;
        if (auto* r = std::get_if<ReadRecord>(&body)) return r->concurrent;
        return false;
      }();
      if (concurrent) continue;
      // Group is [start, k).
      for (std::size_t a = start; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
          if (!observables_commute(layout, steps[a].observable, steps[b].observable)) {
            throw Error("concurrent events " + std::to_string(a) + " and " + std::to_string(b) +
                        " do not commute");
          }
        }
      }
      start = k;
    }
  }

  Path start_path() const {
    Path p;
    p.base = initial;
    return p;
  }

  void apply_all(Path& p, const Unitary& u) const {
    p.base = apply_local(u, p.base, options.exec);
    for (auto& [key, v] : p.views) v = apply_local(u, v, options.exec);
  }

  std::vector<Path> expand(const Path& in, std::size_t k) const {
    const Step& st = steps[k];
    std::vector<Path> out;
    switch (st.kind) {
      case StepKind::kPrepare: {
        Path p = in;
        apply_all(p, st.unitary);
        out.push_back(std::move(p));
        return out;
      }
      case StepKind::kPartition: {
        Path p = in;
        p.groups = st.groups;
        out.push_back(std::move(p));
        return out;
      }
      case StepKind::kInteract:
        return expand_interact(in, k);
      case StepKind::kMeasure:
        return expand_born(in, k, st.performer);
      case StepKind::kRead:
        if (rules.kind == RuleSet::Kind::kRqm5Cpl && st.pointer_read && in.written.count(st.record)) {
          out.push_back(pinned_read(in, k));
          return out;
        }
        return expand_born(in, k, st.performer);
    }
    return out;
  }

  std::string holder_key(const Path& p, const Step& st) const {
    if (p.groups.empty()) return st.performer;
    std::set<std::string> keys;
    for (const auto& t : st.targets) {
      auto it = p.groups.find(t);
      keys.insert(it == p.groups.end() ? "{" + t + "}" : it->second);
    }
    std::vector<std::string> ks(keys.begin(), keys.end());
    return join(ks, "+");
  }

  void record_outcome(Path& p, std::size_t k, const std::string& holder, const Outcome& o) const {
    const Step& st = steps[k];
    p.ledger.append({k, holder, st.observable_name, o});
    if (!st.result.empty()) p.outcomes.push_back({st.result, k, o});
  }

  std::vector<Path> expand_interact(const Path& in, std::size_t k) const {
    const Step& st = steps[k];
    Path evolved = in;
    apply_all(evolved, st.unitary);
    std::string key = st.performer;
    if (!orthodox()) {
      key = holder_key(in, st);
      if (key != st.performer) evolved.alias[st.performer] = key;
    }
    const StateVector& source = orthodox() ? evolved.base : evolved.view(key);
    const Distribution dist = born_distribution(source, st.observable, options.tolerance, options.exec);
    std::vector<Path> out;
    for (std::size_t j = 0; j < dist.size(); ++j) {
      const double pj = dist.probabilities[j];
      if (pj <= options.prune) continue;
      Path c = evolved;
      c.probability = pj;
      const Outcome& o = dist.outcomes[j];
      if (orthodox()) {
        c.base = collapse(c.base, st.observable, o, options.exec);
      } else {
        c.views[key] = collapse(source, st.observable, o, options.exec);
      }
      c.written[st.record] = j;
      c.ledger.append({k, st.performer, st.observable_name, o});
      if (!orthodox() && rules.policy == FactHolderPolicy::kBothParties) {
        for (const auto& t : st.targets) {
          const StateVector& tv = c.view(t);
          const double w = born_distribution(tv, st.observable, options.tolerance, options.exec).probability(o);
          if (w <= options.pin_floor) {
            c.conflicts.push_back({k, "fact holder", t,
                                   "outcome " + to_string(o) + " has zero weight for '" + t + "'"});
          } else {
            c.views[c.key_of(t)] = collapse(tv, st.observable, o, options.exec);
          }
          c.ledger.append({k, t, st.observable_name, o});
        }
      }
      if (!st.result.empty()) c.outcomes.push_back({st.result, k, o});
      out.push_back(std::move(c));
    }
    return out;
  }

  std::vector<Path> expand_born(const Path& in, std::size_t k, const std::string& observer) const {
    const Step& st = steps[k];
    const StateVector& source = orthodox() ? in.base : in.view(observer);
    const Distribution dist = born_distribution(source, st.observable, options.tolerance, options.exec);
    std::vector<Path> out;
    for (std::size_t j = 0; j < dist.size(); ++j) {
      const double pj = dist.probabilities[j];
      if (pj <= options.prune) continue;
      Path c = in;
      c.probability = pj;
      const Outcome& o = dist.outcomes[j];
      StateVector post = collapse(source, st.observable, o, options.exec);
      if (orthodox()) {
        c.base = std::move(post);
      } else {
        c.views[c.key_of(observer)] = std::move(post);
      }
      record_outcome(c, k, observer, o);
      out.push_back(std::move(c));
    }
    return out;
  }

  Path pinned_read(const Path& in, std::size_t k) const {
    const Step& st = steps[k];
    Path c = in;
    c.probability = 1.0;
    const std::size_t index = in.written.at(st.record);
    const Outcome o = st.outcomes.at(index);
    const StateVector& source = in.view(st.performer);
    const double born =
        born_distribution(source, st.observable, options.tolerance, options.exec).probability(o);
    c.pins.push_back({k, st.result, o.front(), born});
    if (born <= options.pin_floor) {
      c.conflicts.push_back({k, "cpl pin", st.performer,
                             "record '" + st.record + "' pinned to " + o.front().str() +
                                 " but the reader's state gives it zero weight"});
    } else {
      c.views[c.key_of(st.performer)] = collapse(source, st.observable, o, options.exec);
    }
    record_outcome(c, k, st.performer, o);
    return c;
  }

  void enumerate(const Path& p, std::size_t k, std::size_t stop, std::vector<Path>& leaves) const {
    if (k == stop) {
      if (leaves.size() >= options.max_branches) throw TooManyBranches{};
      leaves.push_back(p);
      return;
    }
    for (Path& c : expand(p, k)) {
      c.probability *= p.probability;
      if (c.probability <= options.prune) continue;
      enumerate(c, k + 1, stop, leaves);
    }
  }

  std::vector<Path> leaves(std::size_t stop) const {
    std::vector<Path> out;
    enumerate(start_path(), 0, stop, out);
    return out;
  }

  Path sample_path(std::mt19937_64& rng) const {
    Path p = start_path();
    for (std::size_t k = 0; k < steps.size(); ++k) {
      std::vector<Path> children = expand(p, k);
      if (children.empty()) throw Error("event " + std::to_string(k) + " has no admissible outcome");
      double total = 0.0;
      for (const auto& c : children) total += c.probability;
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
      std::size_t pick = children.size() - 1;
      double acc = 0.0;
      for (std::size_t j = 0; j < children.size(); ++j) {
        acc += children[j].probability;
        if (u < acc) {
          pick = j;
          break;
        }
      }
      const double prob = p.probability * children[pick].probability / total;
      p = std::move(children[pick]);
      p.probability = prob;
    }
    return p;
  }

  RunResult to_result(const Path& p, std::uint64_t seed) const {
    RunResult r;
    r.rules = rules;
    r.seed = seed;
    r.ledger = p.ledger;
    r.outcomes = p.outcomes;
    r.pins = p.pins;
    r.conflicts = p.conflicts;
    for (const auto& h : holders) r.perspectives.emplace(h, p.view(h));
    return r;
  }

  static Branch to_branch(const Path& p) {
    Branch b;
    b.probability = p.probability;
    for (const auto& o : p.outcomes) b.outcomes[o.name] = o.outcome;
    b.pins = p.pins;
    b.conflicts = p.conflicts;
    return b;
  }

  std::size_t step_of(const std::string& result) const {
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (!result.empty() && steps[k].result == result) return k;
    }
    throw Error("no event binds result '" + result + "'");
  }

  void check_conditioning(const Conditioning& c, std::size_t stop) const {
    for (const auto& [name, value] : c) {
      (void)value;
      if (step_of(name) >= stop) {
        throw Error("conditioning on '" + name + "', which is not yet written");
      }
    }
  }

  static bool matches(const Branch& b, const Conditioning& c) {
    for (const auto& [name, value] : c) {
      auto it = b.outcomes.find(name);
      if (it == b.outcomes.end() || it->second != value) return false;
    }
    return true;
  }
};

Engine::Engine(Scenario s, RuleSet rules, EngineOptions options) : impl_(std::make_unique<Impl>()) {
  const auto diags = validate(s);
  if (!diags.empty()) throw ParseError(diags);
  impl_->s = std::move(s);
  impl_->rules = rules;
  impl_->options = options;
  impl_->compile();
}

Engine::~Engine() = default;
Engine::Engine(Engine&&) noexcept = default;
Engine& Engine::operator=(Engine&&) noexcept = default;

const Scenario& Engine::scenario() const { return impl_->s; }
const RuleSet& Engine::rules() const { return impl_->rules; }

RunResult Engine::run(std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return run(rng, seed);
}

RunResult Engine::run(std::mt19937_64& rng, std::uint64_t seed_label) const {
  return impl_->to_result(impl_->sample_path(rng), seed_label);
}

std::vector<RunResult> Engine::sample(std::size_t n, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::vector<RunResult> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(run(rng, seed));
  return out;
}

BranchSet Engine::branches(std::optional<std::size_t> events) const {
  const std::size_t stop = std::min(events.value_or(impl_->steps.size()), impl_->steps.size());
  BranchSet out;
  try {
    for (const Path& p : impl_->leaves(stop)) out.branches.push_back(Impl::to_branch(p));
  } catch (const TooManyBranches&) {
    out.branches.clear();
    out.exact = false;
    std::mt19937_64 rng(impl_->options.fallback_seed);
    const std::size_t n = impl_->options.fallback_samples;
    for (std::size_t k = 0; k < n; ++k) {
      // Later events never change earlier results, so full runs are trimmed.
      Branch b = Impl::to_branch(impl_->sample_path(rng));
      b.probability = 1.0 / static_cast<double>(n);
      for (auto it = b.outcomes.begin(); it != b.outcomes.end();) {
        it = impl_->step_of(it->first) < stop ? std::next(it) : b.outcomes.erase(it);
      }
      out.branches.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<Outcome> Engine::possible_outcomes(const std::string& result) const {
  return impl_->steps[impl_->step_of(result)].outcomes;
}

Distribution Engine::predicted_distribution(const std::string& result, const Conditioning& c) const {
  const JointDistribution j = joint_distribution({result}, c);
  Distribution d;
  d.outcomes = possible_outcomes(result);
  for (const auto& o : d.outcomes) d.probabilities.push_back(j.probability({o}));
  return d;
}

JointDistribution Engine::joint_distribution(const std::vector<std::string>& results,
                                             const Conditioning& c) const {
  std::vector<std::vector<Outcome>> options;
  for (const auto& name : results) options.push_back(possible_outcomes(name));
  impl_->check_conditioning(c, impl_->steps.size());
  const BranchSet set = branches();
  std::map<std::vector<std::size_t>, double> acc;
  double total = 0.0;
  for (const Branch& b : set.branches) {
    if (!Impl::matches(b, c)) continue;
    total += b.probability;
    std::vector<std::size_t> key;
    for (std::size_t n = 0; n < results.size(); ++n) {
      const Outcome& o = b.outcomes.at(results[n]);
      const auto& opts = options[n];
      key.push_back(static_cast<std::size_t>(std::find(opts.begin(), opts.end(), o) - opts.begin()));
    }
    acc[key] += b.probability;
  }
  if (total <= 0.0) throw Error("conditioning has zero probability");
  JointDistribution out;
  out.names = results;
  for (const auto& [key, p] : acc) {
    std::vector<Outcome> row;
    for (std::size_t n = 0; n < key.size(); ++n) row.push_back(options[n].at(key[n]));
    out.rows.push_back(std::move(row));
    out.probabilities.push_back(p / total);
  }
  return out;
}

PerspectiveState Engine::perspective(const std::string& observer, long after_event,
                                     const Conditioning& c) const {
  const Scenario& s = impl_->s;
  if (!s.find_agent(observer) && !s.find_observer(observer) && !impl_->layout.find(observer)) {
    throw Error("unknown observer '" + observer + "'");
  }
  if (after_event < -1 || after_event >= static_cast<long>(impl_->steps.size())) {
    throw Error("event index " + std::to_string(after_event) + " is outside the timeline");
  }
  const auto stop = static_cast<std::size_t>(after_event + 1);
  impl_->check_conditioning(c, stop);
  std::vector<Path> leaves;
  try {
    leaves = impl_->leaves(stop);
  } catch (const TooManyBranches&) {
    throw Error("too many branches for an exact perspective");
  }
  std::vector<double> weights;
  std::vector<StateVector> states;
  double total = 0.0;
  for (const Path& p : leaves) {
    if (!Impl::matches(Impl::to_branch(p), c)) continue;
    weights.push_back(p.probability);
    states.push_back(p.view(observer));
    total += p.probability;
  }
  if (total <= 0.0) throw Error("conditioning has zero probability");
  for (auto& w : weights) w /= total;

  PerspectiveState out;
  out.observer = observer;
  out.state = DensityMatrix::mixture(weights, states);
  bool same = true;
  for (const auto& st : states) same = same && st.distance_up_to_phase(states.front()) < 1e-10;
  if (same) out.pure = states.front();
  std::set<std::string> known;
  for (std::size_t k = 0; k < stop; ++k) {
    const Step& st = impl_->steps[k];
    if (!st.result.empty() && st.performer == observer) known.insert(st.result);
  }
  for (const auto& [name, v] : c) {
    (void)v;
    known.insert(name);
  }
  out.knowledge.assign(known.begin(), known.end());
  return out;
}

RunResult run(const Scenario& s, const RuleSet& r, std::uint64_t seed) { return Engine(s, r).run(seed); }

Distribution predicted_distribution(const Scenario& s, const RuleSet& r, const std::string& result,
                                    const Conditioning& c) {
  return Engine(s, r).predicted_distribution(result, c);
}

JointDistribution joint_distribution(const Scenario& s, const RuleSet& r,
                                     const std::vector<std::string>& results, const Conditioning& c) {
  return Engine(s, r).joint_distribution(results, c);
}

PerspectiveState perspective(const Scenario& s, const RuleSet& r, const std::string& observer,
                             long after_event, const Conditioning& c) {
  return Engine(s, r).perspective(observer, after_event, c);
}

}  // namespace wfcheck::interpret
