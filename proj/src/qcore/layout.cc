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

#include "wfcheck/qcore/layout.h"

#include <algorithm>
#include <set>

#include "wfcheck/qcore/linalg.h"

namespace wfcheck {

SpaceLayout::SpaceLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
  std::set<std::string> seen;
  for (const auto& s : subsystems_) {
    if (s.id.empty()) throw Error("subsystem with empty identifier");
    if (s.dim < 2) throw Error("subsystem '" + s.id + "' has dimension < 2");
    if (!seen.insert(s.id).second) throw Error("duplicate subsystem identifier '" + s.id + "'");
  }
  strides_.assign(subsystems_.size(), 1);
  total_ = 1;
  for (std::size_t i = subsystems_.size(); i-- > 0;) {
    strides_[i] = total_;
    total_ *= subsystems_[i].dim;
  }
}

SpaceLayout SpaceLayout::concat(const SpaceLayout& a, const SpaceLayout& b) {
  std::vector<Subsystem> all(a.subsystems_);
  all.insert(all.end(), b.subsystems_.begin(), b.subsystems_.end());
  return SpaceLayout(std::move(all));
}

std::optional<std::size_t> SpaceLayout::find(std::string_view id) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t SpaceLayout::position(std::string_view id) const {
  if (auto pos = find(id)) return *pos;
  throw Error("unknown subsystem '" + std::string(id) + "'");
}

std::vector<std::string> SpaceLayout::ids() const {
  std::vector<std::string> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.id);
  return out;
}

SpaceLayout SpaceLayout::subset(std::span<const std::string> ids) const {
  std::vector<Subsystem> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(subsystems_[position(id)]);
  return SpaceLayout(std::move(out));
}

std::vector<std::string> SpaceLayout::complement(std::span<const std::string> ids) const {
  std::vector<std::string> out;
  for (const auto& s : subsystems_) {
    if (std::find(ids.begin(), ids.end(), s.id) == ids.end()) out.push_back(s.id);
  }
  return out;
}

namespace {

std::vector<std::size_t> offsets_for(const SpaceLayout& layout,
                                     std::span<const std::string> ids) {
  std::vector<std::size_t> offsets{0};
  for (const auto& id : ids) {
    const std::size_t pos = layout.position(id);
    const std::size_t dim = layout[pos].dim;
    const std::size_t stride = layout.stride(pos);
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dim);
    for (std::size_t base : offsets) {
      for (std::size_t d = 0; d < dim; ++d) next.push_back(base + d * stride);
    }
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

IndexSplit split_indices(const SpaceLayout& layout, std::span<const std::string> inner) {
  const auto outer = layout.complement(inner);
  return split_indices(layout, inner, outer);
}

IndexSplit split_indices(const SpaceLayout& layout, std::span<const std::string> inner,
                         std::span<const std::string> outer) {
  std::set<std::string> seen;
  for (const auto& id : inner) {
    layout.position(id);
    if (!seen.insert(id).second) throw Error("subsystem '" + id + "' listed twice");
  }
  for (const auto& id : outer) {
    layout.position(id);
    if (!seen.insert(id).second) throw Error("subsystem '" + id + "' listed twice");
  }
  if (seen.size() != layout.size()) throw Error("subsystem split does not cover the layout");
  return IndexSplit{offsets_for(layout, inner), offsets_for(layout, outer)};
}

}  // namespace wfcheck
