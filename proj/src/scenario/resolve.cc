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

#include "wfcheck/scenario/resolve.h"

#include <cmath>

#include "wfcheck/qcore/ops.h"

namespace wfcheck::scenario {

BasisSpec unbound_basis(const BasisDecl& d) {
  BasisSpec b;
  switch (d.preset) {
    case BasisPreset::kBasis1:
      if (d.dims.size() != 1) throw Error("basis1 acts on a single subsystem");
      b = bases::computational("_", d.dims.front());
      break;
    case BasisPreset::kBasis3:
      if (d.dims != preset_dims(d.preset)) throw Error("basis3 is a qubit basis");
      b = bases::basis3("_");
      break;
    case BasisPreset::kBasis2:
      if (d.dims != preset_dims(d.preset)) throw Error("basis2 acts on a qubit pair");
      b = bases::basis2("_0", "_1");
      break;
    case BasisPreset::kRaw: {
      std::size_t dim = 1;
      for (auto k : d.dims) dim *= k;
      Matrix v(d.vectors.size(), dim);
      for (std::size_t r = 0; r < d.vectors.size(); ++r) {
        if (d.vectors[r].size() != dim) throw Error("basis vector length does not match dims");
        for (std::size_t c = 0; c < dim; ++c) v(r, c) = d.vectors[r][c];
      }
      // Raw vectors carry 17 significant digits; accept literal-level rounding.
      return BasisSpec({}, d.dims, std::move(v), d.labels, 1e-8);
    }
  }
  if (!d.labels.empty()) b = b.with_labels(d.labels);
  return b;
}

BasisSpec resolve_basis(const Scenario& s, const std::string& name,
                        const std::vector<std::string>& targets) {
  const BasisDecl* d = s.find_basis(name);
  if (!d) throw Error("unknown basis '" + name + "'");
  const SpaceLayout layout = s.layout();
  if (targets.size() != d->dims.size()) {
    throw Error("basis '" + name + "' acts on " + std::to_string(d->dims.size()) +
                " subsystem(s), got " + std::to_string(targets.size()));
  }
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto pos = layout.find(targets[k]);
    if (!pos) throw Error("unknown subsystem '" + targets[k] + "'");
    if (layout[*pos].dim != d->dims[k]) {
      throw Error("basis '" + name + "' expects dimension " + std::to_string(d->dims[k]) + " on '" +
                  targets[k] + "'");
    }
  }
  return unbound_basis(*d).bound_to(targets);
}

BasisSpec record_pointer(const Scenario& s, const std::string& record) {
  const auto [agent, rec] = s.find_record(record);
  if (!rec) throw Error("unknown record '" + record + "'");
  if (rec->pointer.empty()) return bases::computational(rec->id, rec->dim);
  return resolve_basis(s, rec->pointer, {rec->id});
}

ObservableSpec resolve_observable(const Scenario& s, const Measure& m) {
  std::vector<BasisSpec> factors;
  std::size_t next = 0;
  for (const auto& name : m.bases) {
    const BasisDecl* d = s.find_basis(name);
    if (!d) throw Error("unknown basis '" + name + "'");
    if (next + d->dims.size() > m.targets.size()) throw Error("measure has too few targets for its bases");
    std::vector<std::string> targets(m.targets.begin() + next, m.targets.begin() + next + d->dims.size());
    next += d->dims.size();
    factors.push_back(resolve_basis(s, name, targets));
  }
  if (next != m.targets.size()) throw Error("measure has more targets than its bases cover");
  ObservableSpec o = factors.size() == 1 ? ObservableSpec::single(std::move(factors.front()))
                                         : ObservableSpec::product(std::move(factors));
  if (m.encode_bits) o = relabel(o, bit_encoding_map(o));
  return o;
}

BasisSpec resolve_read_basis(const Scenario& s, const ReadRecord& r) {
  if (r.basis.empty()) return record_pointer(s, r.record);
  return resolve_basis(s, r.basis, {r.record});
}

std::vector<Complex> resolve_state(const StateExpr& e, const std::vector<std::size_t>& dims) {
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  switch (e.kind) {
    case StateKind::kGhz: {
      if (dims.size() < 2) throw Error("ghz needs at least two subsystems");
      for (auto d : dims) {
        if (d != 2) throw Error("ghz needs qubit subsystems");
      }
      std::vector<Complex> amps(total);
      amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
      return amps;
    }
    case StateKind::kSchmidt: {
      if (dims.size() != 2) throw Error("schmidt needs exactly two subsystems");
      const std::size_t n = e.coefficients.size();
      if (n < 1 || n > dims[0] || n > dims[1]) {
        throw Error("schmidt has more coefficients than the subsystems have states");
      }
      std::vector<Complex> amps(total);
      for (std::size_t l = 0; l < n; ++l) amps[l * dims[1] + l] = e.coefficients[l];
      return amps;
    }
    case StateKind::kAmplitudes:
      if (e.amplitudes.size() != total) {
        throw Error("state literal has " + std::to_string(e.amplitudes.size()) +
                    " amplitudes, targets need " + std::to_string(total));
      }
      return e.amplitudes;
  }
  return {};
}

double state_norm_squared(const StateExpr& e) {
  switch (e.kind) {
    case StateKind::kGhz:
      return 1.0;
    case StateKind::kSchmidt: {
      double n = 0.0;
      for (double c : e.coefficients) n += c * c;
      return n;
    }
    case StateKind::kAmplitudes:
      return norm_squared(e.amplitudes);
  }
  return 0.0;
}

StateVector initial_state(const Scenario& s) {
  std::vector<StateVector> parts;
  for (const auto& sys : s.systems) {
    parts.push_back(StateVector::basis_state(SpaceLayout({{sys.id, sys.dim}}), 0));
  }
  for (const auto& a : s.agents) {
    for (const auto& r : a.records) {
      const BasisSpec pointer = record_pointer(s, r.id);
      const auto v = pointer.vector(pointer.index_of(r.init));
      parts.emplace_back(SpaceLayout({{r.id, r.dim}}), std::vector<Complex>(v.begin(), v.end()));
    }
  }
  return tensor(parts);
}

}  // namespace wfcheck::scenario
