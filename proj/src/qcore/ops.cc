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

#include "wfcheck/qcore/ops.h"

#include <algorithm>
#include <cmath>

namespace wfcheck {

double Distribution::probability(const Outcome& outcome) const {
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k] == outcome) return probabilities[k];
  }
  return 0.0;
}

double Distribution::total() const {
  double t = 0.0;
  for (double p : probabilities) t += p;
  return t;
}

StateVector tensor(std::span<const StateVector> states) {
  if (states.empty()) throw Error("tensor of no states");
  SpaceLayout layout = states.front().layout();
  std::vector<Complex> amps(states.front().amplitudes().begin(), states.front().amplitudes().end());
  for (std::size_t k = 1; k < states.size(); ++k) {
    layout = SpaceLayout::concat(layout, states[k].layout());
    amps = kron(amps, states[k].amplitudes());
  }
  return StateVector(std::move(layout), std::move(amps));
}

Unitary tensor(std::span<const Unitary> unitaries) {
  if (unitaries.empty()) throw Error("tensor of no unitaries");
  SpaceLayout layout = unitaries.front().layout();
  Matrix m = unitaries.front().entries();
  for (std::size_t k = 1; k < unitaries.size(); ++k) {
    layout = SpaceLayout::concat(layout, unitaries[k].layout());
    m = kron(m, unitaries[k].entries());
  }
  return Unitary(std::move(layout), std::move(m));
}

StateVector superpose(std::span<const Complex> coefficients, std::span<const StateVector> states,
                      double tol) {
  if (coefficients.size() != states.size() || states.empty()) throw Error("bad superposition");
  const SpaceLayout& layout = states.front().layout();
  std::vector<Complex> amps(layout.total_dimension());
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (!(states[k].layout() == layout)) throw Error("superposing states over different layouts");
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coefficients[k] * states[k][i];
  }
  return StateVector(layout, std::move(amps), tol);
}

StateVector apply(const Unitary& u, const StateVector& s, kernels::Exec exec) {
  if (!(u.layout() == s.layout())) throw Error("unitary and state layouts differ");
  return StateVector(s.layout(), kernels::multiply(u.entries(), s.amplitudes(), exec));
}

StateVector apply_local(const Unitary& u, const StateVector& s, kernels::Exec exec) {
  const auto ids = u.layout().ids();
  for (const auto& sub : u.layout().subsystems()) {
    const auto pos = s.layout().find(sub.id);
    if (!pos) throw Error("unitary acts on unknown subsystem '" + sub.id + "'");
    if (s.layout()[*pos].dim != sub.dim) throw Error("dimension mismatch on '" + sub.id + "'");
  }
  const IndexSplit split = split_indices(s.layout(), ids);
  std::vector<Complex> out(s.dimension());
  kernels::apply_local(u.entries(), split, s.amplitudes(), out, exec);
  return StateVector(s.layout(), std::move(out));
}

Unitary embed(const Unitary& u, const SpaceLayout& layout) {
  const auto ids = u.layout().ids();
  const IndexSplit split = split_indices(layout, ids);
  const std::size_t d = layout.total_dimension();
  Matrix m(d, d);
  for (std::size_t o = 0; o < split.outer_dim(); ++o) {
    const std::size_t base = split.outer_offsets[o];
    for (std::size_t r = 0; r < split.inner_dim(); ++r) {
      for (std::size_t c = 0; c < split.inner_dim(); ++c) {
        m(base + split.inner_offsets[r], base + split.inner_offsets[c]) = u.entries()(r, c);
      }
    }
  }
  return Unitary(layout, std::move(m));
}

namespace {

void require_normalized(const StateVector& s, double tol) {
  if (std::abs(norm_squared(s.amplitudes()) - 1.0) > tol) {
    throw Error("state is not normalized");
  }
}

void require_targets(const SpaceLayout& layout, const BasisSpec& basis) {
  const auto& targets = basis.targets();
  if (targets.empty()) throw Error("basis is not bound to any subsystem");
  for (std::size_t k = 0; k < targets.size(); ++k) {
    const auto pos = layout.find(targets[k]);
    if (!pos) throw Error("measurement target '" + targets[k] + "' is not in the layout");
    if (layout[*pos].dim != basis.dims()[k]) {
      throw Error("basis/target mismatch on '" + targets[k] + "'");
    }
  }
}

}  // namespace

Distribution born_distribution(const StateVector& s, const ObservableSpec& m, double tol,
                               kernels::Exec exec) {
  require_normalized(s, tol);
  const BasisSpec joint = m.joint_basis();
  require_targets(s.layout(), joint);
  const IndexSplit split = split_indices(s.layout(), joint.targets());
  Distribution d;
  d.outcomes = m.outcomes();
  d.probabilities = kernels::basis_probabilities(joint.vectors(), split, s.amplitudes(), exec);
  return d;
}

StateVector project(const StateVector& s, const ObservableSpec& m, const Outcome& outcome,
                    double tol, kernels::Exec exec) {
  require_normalized(s, tol);
  const BasisSpec joint = m.joint_basis();
  require_targets(s.layout(), joint);
  const Outcome raw = m.raw(outcome);
  const auto all = m.raw_outcomes();
  const auto index = static_cast<std::size_t>(std::find(all.begin(), all.end(), raw) - all.begin());
  const IndexSplit split = split_indices(s.layout(), joint.targets());
  std::vector<Complex> out(s.dimension());
  const double weight = kernels::project(joint.vector(index), split, s.amplitudes(), out, exec);
  if (weight <= tol) {
    throw Error("outcome " + to_string(outcome) + " has zero probability; projection undefined");
  }
  const double scale = 1.0 / std::sqrt(weight);
  for (auto& a : out) a *= scale;
  return StateVector(s.layout(), std::move(out));
}

DensityMatrix partial_trace(const StateVector& s, std::span<const std::string> keep,
                            kernels::Exec exec) {
  if (keep.empty()) throw Error("partial trace needs a nonempty keep set");
  const IndexSplit split = split_indices(s.layout(), keep);
  return DensityMatrix(s.layout().subset(keep), kernels::reduce_pure(split, s.amplitudes(), exec));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::string> keep,
                            kernels::Exec exec) {
  if (keep.empty()) throw Error("partial trace needs a nonempty keep set");
  const IndexSplit split = split_indices(rho.layout(), keep);
  return DensityMatrix(rho.layout().subset(keep), kernels::reduce_mixed(split, rho.entries(), exec));
}

std::vector<Complex> SchmidtDecomposition::reassemble() const {
  if (coefficients.empty()) return {};
  std::vector<Complex> out(left.front().dimension() * right.front().dimension());
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    const auto term = kron(left[k].amplitudes(), right[k].amplitudes());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coefficients[k] * term[i];
  }
  return out;
}

SchmidtDecomposition schmidt(const StateVector& s, std::span<const std::string> left,
                             std::span<const std::string> right, double tol) {
  if (left.empty() || right.empty()) throw Error("Schmidt bipartition needs two nonempty sides");
  const IndexSplit split = split_indices(s.layout(), left, right);
  Matrix m(split.inner_dim(), split.outer_dim());
  for (std::size_t t = 0; t < split.inner_dim(); ++t) {
    for (std::size_t o = 0; o < split.outer_dim(); ++o) {
      m(t, o) = s[split.inner_offsets[t] + split.outer_offsets[o]];
    }
  }
  const SvdResult svd_result = svd(m);
  const SpaceLayout left_layout = s.layout().subset(left);
  const SpaceLayout right_layout = s.layout().subset(right);
  SchmidtDecomposition out;
  for (std::size_t k = 0; k < svd_result.singular_values.size(); ++k) {
    const double lambda = svd_result.singular_values[k];
    if (lambda <= tol) continue;
    std::vector<Complex> l(split.inner_dim());
    std::vector<Complex> r(split.outer_dim());
    for (std::size_t t = 0; t < l.size(); ++t) l[t] = svd_result.left(t, k);
    // M = U S V^dagger, so the right vector is conj(V[:, k]).
    for (std::size_t o = 0; o < r.size(); ++o) r[o] = std::conj(svd_result.right(o, k));
    out.coefficients.push_back(lambda);
    out.left.push_back(StateVector::normalized(left_layout, std::move(l)));
    out.right.push_back(StateVector::normalized(right_layout, std::move(r)));
  }
  out.unique = true;
  for (std::size_t k = 1; k < out.coefficients.size(); ++k) {
    if (out.coefficients[k - 1] - out.coefficients[k] <= kSchmidtDistinctness) out.unique = false;
  }
  return out;
}

Unitary build_premeasurement(const BasisSpec& measured, const BasisSpec& pointer,
                             const Label& init) {
  if (pointer.targets().size() != 1) throw Error("record pointer basis must act on one subsystem");
  const std::size_t n = measured.size();
  const std::size_t d = pointer.size();
  if (d < n) {
    throw Error("record '" + pointer.targets().front() + "' has " + std::to_string(d) +
                " states, measured basis needs " + std::to_string(n));
  }
  const std::size_t init_index = pointer.index_of(init);
  std::vector<Subsystem> subsystems;
  for (std::size_t k = 0; k < measured.targets().size(); ++k) {
    subsystems.push_back({measured.targets()[k], measured.dims()[k]});
  }
  subsystems.push_back({pointer.targets().front(), d});
  SpaceLayout layout(std::move(subsystems));

  const std::size_t dm = measured.dimension();
  Matrix u(dm * d, dm * d);
  // U = sum_j |b_j><b_j| (x) sum_k |r_{(k - init + j) mod d}><r_k|
  for (std::size_t j = 0; j < n; ++j) {
    const auto bj = measured.vector(j);
    for (std::size_t k = 0; k < d; ++k) {
      const auto rk = pointer.vector(k);
      const auto rt = pointer.vector((k + d - init_index + j) % d);
      for (std::size_t a = 0; a < dm; ++a) {
        if (bj[a] == Complex{}) continue;
        for (std::size_t b = 0; b < dm; ++b) {
          const Complex proj = bj[a] * std::conj(bj[b]);
          if (proj == Complex{}) continue;
          for (std::size_t x = 0; x < d; ++x) {
            if (rt[x] == Complex{}) continue;
            for (std::size_t y = 0; y < d; ++y) {
              u(a * d + x, b * d + y) += proj * rt[x] * std::conj(rk[y]);
            }
          }
        }
      }
    }
  }
  return Unitary(std::move(layout), std::move(u));
}

Unitary build_premeasurement(const BasisSpec& measured, const Subsystem& record,
                             const Label& init) {
  return build_premeasurement(measured, bases::computational(record.id, record.dim), init);
}

}  // namespace wfcheck
