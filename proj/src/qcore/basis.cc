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

#include "wfcheck/qcore/basis.h"

#include <cmath>
#include <cstdio>
#include <set>

namespace wfcheck {

Label Label::symbol(std::string name) {
  if (name.empty()) throw Error("empty symbolic label");
  Label l;
  l.symbol_ = std::move(name);
  return l;
}

double Label::value() const {
  if (is_symbol()) throw Error("label '" + symbol_ + "' is not numeric");
  return value_;
}

std::string Label::str() const {
  if (is_symbol()) return symbol_;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

std::partial_ordering Label::operator<=>(const Label& other) const {
  if (is_number() != other.is_number()) {
    return is_number() ? std::partial_ordering::less : std::partial_ordering::greater;
  }
  if (is_number()) return value_ <=> other.value_;
  return symbol_ <=> other.symbol_;
}

std::string to_string(const Outcome& outcome) {
  if (outcome.size() == 1) return outcome.front().str();
  std::string out = "(";
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (i) out += ",";
    out += outcome[i].str();
  }
  return out + ")";
}

BasisSpec::BasisSpec(std::vector<std::string> targets, std::vector<std::size_t> dims, Matrix vectors,
                     std::vector<Label> labels, double tol)
    : targets_(std::move(targets)),
      dims_(std::move(dims)),
      vectors_(std::move(vectors)),
      labels_(std::move(labels)) {
  if (!targets_.empty() && targets_.size() != dims_.size()) {
    throw Error("basis targets and dimensions disagree");
  }
  std::size_t d = 1;
  for (std::size_t k : dims_) d *= k;
  if (dims_.empty() || vectors_.cols() != d) throw Error("basis vectors do not match the target dimension");
  if (vectors_.rows() != d) {
    throw Error("basis has " + std::to_string(vectors_.rows()) + " vectors, space needs " +
                std::to_string(d));
  }
  if (labels_.size() != vectors_.rows()) throw Error("basis needs one label per vector");
  std::set<Label> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error("basis labels are not distinct");
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      const Complex ip = inner(vectors_.row(a), vectors_.row(b));
      const Complex expected = a == b ? 1.0 : 0.0;
      if (std::abs(ip - expected) > tol) throw Error("basis vectors are not orthonormal");
    }
  }
}

std::size_t BasisSpec::index_of(const Label& label) const {
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (labels_[k] == label) return k;
  }
  throw Error("label '" + label.str() + "' is not in the basis");
}

BasisSpec BasisSpec::bound_to(std::vector<std::string> targets) const {
  BasisSpec out = *this;
  if (targets.size() != dims_.size()) throw Error("basis/target mismatch");
  out.targets_ = std::move(targets);
  return out;
}

BasisSpec BasisSpec::with_labels(std::vector<Label> labels) const {
  return BasisSpec(targets_, dims_, vectors_, std::move(labels));
}

BasisSpec tensor(std::span<const BasisSpec> factors) {
  if (factors.empty()) throw Error("tensor of no bases");
  std::vector<std::string> targets;
  std::vector<std::size_t> dims;
  Matrix vectors(1, 1, {Complex{1.0}});
  std::vector<std::vector<Label>> labels{{}};
  for (const auto& f : factors) {
    targets.insert(targets.end(), f.targets().begin(), f.targets().end());
    dims.insert(dims.end(), f.dims().begin(), f.dims().end());
    vectors = kron(vectors, f.vectors());
    std::vector<std::vector<Label>> next;
    for (const auto& prefix : labels) {
      for (const auto& l : f.labels()) {
        auto t = prefix;
        t.push_back(l);
        next.push_back(std::move(t));
      }
    }
    labels = std::move(next);
  }
  // Joint labels are the flat tuple index; callers keep the tuples.
  std::vector<Label> flat;
  for (std::size_t k = 0; k < labels.size(); ++k) flat.emplace_back(static_cast<double>(k));
  return BasisSpec(std::move(targets), std::move(dims), std::move(vectors), std::move(flat));
}

namespace bases {

namespace {
const double kHalf = 1.0 / std::sqrt(2.0);
const Complex kI{0.0, 1.0};
}  // namespace

BasisSpec computational(std::string target, std::size_t dim) {
  std::vector<Label> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.emplace_back(static_cast<double>(k));
  return BasisSpec({std::move(target)}, {dim}, Matrix::identity(dim), std::move(labels));
}

BasisSpec basis1(std::string target) {
  return BasisSpec({std::move(target)}, {2}, Matrix::identity(2), {Label(1), Label(-1)});
}

BasisSpec basis3(std::string target) {
  Matrix v(2, 2, {kHalf, kI * kHalf, kHalf, -kI * kHalf});
  return BasisSpec({std::move(target)}, {2}, std::move(v), {Label(1), Label(-1)});
}

BasisSpec basis2(std::string system, std::string record) {
  const BasisSpec b3 = basis3("q");
  const auto plus = b3.vector(0);
  const auto minus = b3.vector(1);
  const auto pp = kron(plus, plus);
  const auto mm = kron(minus, minus);
  const auto pm = kron(plus, minus);
  const auto mp = kron(minus, plus);
  Matrix v(4, 4);
  for (std::size_t k = 0; k < 4; ++k) {
    v(0, k) = kHalf * (pp[k] + kI * mm[k]);
    v(1, k) = kHalf * (pp[k] - kI * mm[k]);
    v(2, k) = pm[k];
    v(3, k) = mp[k];
  }
  return BasisSpec({std::move(system), std::move(record)}, {2, 2}, std::move(v),
                   {Label(1), Label(-1), Label::symbol("off0"), Label::symbol("off1")});
}

}  // namespace bases

}  // namespace wfcheck
