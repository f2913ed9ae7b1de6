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

#include "wfcheck/qcore/observable.h"

#include <set>

namespace wfcheck {

double ObservableFactor::eigenvalue(const Label& label) const {
  if (eigenvalues.empty()) return label.value();
  auto it = eigenvalues.find(label);
  if (it == eigenvalues.end()) throw Error("no eigenvalue for label '" + label.str() + "'");
  return it->second;
}

ObservableSpec ObservableSpec::single(BasisSpec basis) {
  ObservableSpec o;
  o.factors_.push_back({std::move(basis), {}});
  return o;
}

ObservableSpec ObservableSpec::product(std::vector<BasisSpec> factors) {
  if (factors.empty()) throw Error("product observable without factors");
  std::set<std::string> seen;
  ObservableSpec o;
  for (auto& f : factors) {
    for (const auto& t : f.targets()) {
      if (!seen.insert(t).second) {
        throw Error("product observable factors overlap on subsystem '" + t + "'");
      }
    }
    o.factors_.push_back({std::move(f), {}});
  }
  return o;
}

std::vector<std::string> ObservableSpec::targets() const {
  std::vector<std::string> out;
  for (const auto& f : factors_) {
    out.insert(out.end(), f.basis.targets().begin(), f.basis.targets().end());
  }
  return out;
}

BasisSpec ObservableSpec::joint_basis() const {
  if (factors_.size() == 1) return factors_.front().basis;
  std::vector<BasisSpec> bases;
  for (const auto& f : factors_) bases.push_back(f.basis);
  return tensor(bases);
}

std::vector<Outcome> ObservableSpec::raw_outcomes() const {
  std::vector<Outcome> out{{}};
  for (const auto& f : factors_) {
    std::vector<Outcome> next;
    next.reserve(out.size() * f.basis.size());
    for (const auto& prefix : out) {
      for (const auto& l : f.basis.labels()) {
        Outcome t = prefix;
        t.push_back(l);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Outcome> ObservableSpec::outcomes() const {
  auto raw_list = raw_outcomes();
  if (!encoding_) return raw_list;
  std::vector<Outcome> out;
  out.reserve(raw_list.size());
  for (const auto& r : raw_list) out.push_back(report(r));
  return out;
}

Outcome ObservableSpec::report(const Outcome& raw_outcome) const {
  if (!encoding_) return raw_outcome;
  auto it = encoding_->find(raw_outcome);
  if (it == encoding_->end()) throw Error("outcome " + to_string(raw_outcome) + " has no encoding");
  return {it->second};
}

Outcome ObservableSpec::raw(const Outcome& reported) const {
  if (!encoding_) {
    const auto all = raw_outcomes();
    for (const auto& o : all) {
      if (o == reported) return o;
    }
    throw Error("unknown outcome " + to_string(reported));
  }
  for (const auto& [from, to] : *encoding_) {
    if (reported.size() == 1 && reported.front() == to) return from;
  }
  throw Error("unknown outcome " + to_string(reported));
}

double ObservableSpec::eigenvalue(const Outcome& raw_outcome) const {
  if (raw_outcome.size() != factors_.size()) throw Error("outcome arity mismatch");
  double v = 1.0;
  for (std::size_t k = 0; k < factors_.size(); ++k) v *= factors_[k].eigenvalue(raw_outcome[k]);
  return v;
}

void ObservableSpec::set_eigenvalues(std::size_t factor, std::map<Label, double> eigenvalues) {
  if (factor >= factors_.size()) throw Error("factor index out of range");
  for (const auto& l : factors_[factor].basis.labels()) {
    if (!eigenvalues.count(l)) throw Error("eigenvalue map misses label '" + l.str() + "'");
  }
  factors_[factor].eigenvalues = std::move(eigenvalues);
}

ObservableSpec relabel(const ObservableSpec& o, const std::map<Outcome, Label>& map) {
  const auto raw_list = o.raw_outcomes();
  if (map.size() != raw_list.size()) throw Error("relabel map is not a bijection on the outcome set");
  std::set<Label> images;
  for (const auto& r : raw_list) {
    auto it = map.find(r);
    if (it == map.end()) throw Error("relabel map misses outcome " + to_string(r));
    if (!images.insert(it->second).second) {
      throw Error("relabel map is not injective (label '" + it->second.str() + "' reused)");
    }
  }
  ObservableSpec out = o;
  out.encoding_ = map;
  return out;
}

BitEncoding encode_bits(std::span<const int> signs) {
  BitEncoding e;
  for (std::size_t n = 0; n < signs.size(); ++n) {
    if (signs[n] != 1 && signs[n] != -1) throw Error("bit encoding needs +1/-1 entries");
    const int b = signs[n] == 1 ? 0 : 1;
    e.bits.push_back(b);
    e.value += static_cast<std::uint64_t>(b) << n;
  }
  return e;
}

std::map<Outcome, Label> bit_encoding_map(const ObservableSpec& o) {
  for (const auto& f : o.factors()) {
    const auto& labels = f.basis.labels();
    const std::set<Label> got(labels.begin(), labels.end());
    if (got != std::set<Label>{Label(1), Label(-1)}) {
      throw Error("bit encoding needs every factor to have exactly the labels +1 and -1");
    }
  }
  std::map<Outcome, Label> map;
  for (const auto& raw_outcome : o.raw_outcomes()) {
    std::vector<int> signs;
    for (const auto& l : raw_outcome) signs.push_back(l.value() > 0 ? 1 : -1);
    map.emplace(raw_outcome, Label(static_cast<double>(encode_bits(signs).value)));
  }
  return map;
}

}  // namespace wfcheck
