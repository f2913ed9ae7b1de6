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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wfcheck {

struct Subsystem {
  std::string id;
  std::size_t dim = 2;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered tensor factorization of a Hilbert space. Amplitude indices are
/// big-endian over declaration order: the first subsystem is the most
/// significant digit.
class SpaceLayout {
 public:
  SpaceLayout() = default;
  /// Throws Error on duplicate identifiers or dimension < 2.
  explicit SpaceLayout(std::vector<Subsystem> subsystems);

  /// Concatenation; throws Error if an identifier appears on both sides.
  static SpaceLayout concat(const SpaceLayout& a, const SpaceLayout& b);

  std::span<const Subsystem> subsystems() const { return subsystems_; }
  std::size_t size() const { return subsystems_.size(); }
  std::size_t total_dimension() const { return total_; }
  const Subsystem& operator[](std::size_t pos) const { return subsystems_[pos]; }

  std::optional<std::size_t> find(std::string_view id) const;
  /// Throws Error for unknown ids.
  std::size_t position(std::string_view id) const;
  std::size_t stride(std::size_t pos) const { return strides_[pos]; }
  std::vector<std::string> ids() const;

  /// Layout of the listed subsystems, in the listed order.
  SpaceLayout subset(std::span<const std::string> ids) const;
  /// Ids not in `ids`, in declaration order.
  std::vector<std::string> complement(std::span<const std::string> ids) const;

  bool operator==(const SpaceLayout& other) const {
    return subsystems_ == other.subsystems_;
  }

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Splits every global index into (inner, outer) digits:
///   global = inner_offsets[i] + outer_offsets[o].
/// Inner indices are big-endian over the requested subsystem order, outer
/// indices big-endian over the remaining subsystems.
struct IndexSplit {
  std::vector<std::size_t> inner_offsets;
  std::vector<std::size_t> outer_offsets;

  std::size_t inner_dim() const { return inner_offsets.size(); }
  std::size_t outer_dim() const { return outer_offsets.size(); }
};

/// Outer subsystems are the complement of `inner` in declaration order.
IndexSplit split_indices(const SpaceLayout& layout, std::span<const std::string> inner);
/// Explicit outer order; `inner` and `outer` must partition the layout.
IndexSplit split_indices(const SpaceLayout& layout, std::span<const std::string> inner,
                         std::span<const std::string> outer);

}  // namespace wfcheck
