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

#include "wfcheck/checks/parity.h"

#include <algorithm>
#include <bit>
#include <map>

#include "wfcheck/qcore/linalg.h"

namespace wfcheck::checks {

std::string ParityConstraint::str() const {
  std::string out;
  bool negative = false;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (k) out += '*';
    out += symbols[k].name;
    negative ^= symbols[k].negated;
  }
  if (out.empty()) out = "1";
  return std::string(negative ? "-" : "") + out + (required > 0 ? " = +1" : " = -1");
}

std::string FormalProduct::monomial() const {
  std::string out;
  for (const auto& [name, e] : half_monomial) {
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string FormalProduct::value() const { return square < 0 ? "+-i" : "+-1"; }

namespace detail {

namespace {

bool holds(std::uint32_t a, const std::vector<std::uint32_t>& masks, const std::vector<bool>& odd) {
  for (std::size_t c = 0; c < masks.size(); ++c) {
    if (((std::popcount(a & masks[c]) & 1) != 0) != odd[c]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint32_t> satisfying_serial(const std::vector<std::uint32_t>& masks,
                                             const std::vector<bool>& odd, std::size_t n) {
  std::vector<std::uint32_t> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < total; ++a) {
    if (holds(static_cast<std::uint32_t>(a), masks, odd)) out.push_back(static_cast<std::uint32_t>(a));
  }
  return out;
}

std::vector<std::uint32_t> satisfying_parallel(const std::vector<std::uint32_t>& masks,
                                               const std::vector<bool>& odd, std::size_t n) {
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::int64_t blocks = static_cast<std::int64_t>(kernels::kReductionBlocks);
  std::vector<std::vector<std::uint32_t>> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(b) / static_cast<std::uint64_t>(blocks);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(b + 1) / static_cast<std::uint64_t>(blocks);
    auto& part = parts[static_cast<std::size_t>(b)];
    for (std::uint64_t a = lo; a < hi; ++a) {
      if (holds(static_cast<std::uint32_t>(a), masks, odd)) part.push_back(static_cast<std::uint32_t>(a));
    }
  }
  std::vector<std::uint32_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

namespace {

// Gaussian elimination over GF(2) tracking which constraints were combined.
// Returns a subset whose parity rows cancel but whose right sides do not.
std::optional<std::vector<std::size_t>> inconsistency_certificate(const std::vector<std::uint32_t>& masks,
                                                                  const std::vector<bool>& odd,
                                                                  std::size_t n) {
  const std::size_t m = masks.size();
  std::vector<std::uint32_t> rows(masks);
  std::vector<bool> rhs(odd);
  std::vector<std::vector<bool>> combo(m, std::vector<bool>(m));
  for (std::size_t r = 0; r < m; ++r) combo[r][r] = true;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < m; ++col) {
    const std::uint32_t bit = std::uint32_t{1} << col;
    std::size_t r = pivot_row;
    while (r < m && !(rows[r] & bit)) ++r;
    if (r == m) continue;
    std::swap(rows[r], rows[pivot_row]);
    std::swap(combo[r], combo[pivot_row]);
    const bool t = rhs[r];
    rhs[r] = rhs[pivot_row];
    rhs[pivot_row] = t;
    for (std::size_t k = 0; k < m; ++k) {
      if (k != pivot_row && (rows[k] & bit)) {
        rows[k] ^= rows[pivot_row];
        rhs[k] = rhs[k] != rhs[pivot_row];
        for (std::size_t c = 0; c < m; ++c) combo[k][c] = combo[k][c] != combo[pivot_row][c];
      }
    }
    ++pivot_row;
  }
  // Prefer the smallest certificate among the inconsistent zero rows.
  std::optional<std::vector<std::size_t>> best;
  for (std::size_t r = 0; r < m; ++r) {
    if (rows[r] != 0 || !rhs[r]) continue;
    std::vector<std::size_t> subset;
    for (std::size_t c = 0; c < m; ++c) {
      if (combo[r][c]) subset.push_back(c);
    }
    if (!best || subset.size() < best->size()) best = std::move(subset);
  }
  return best;
}

}  // namespace

AssignmentSearchResult parity_search(const std::vector<ParityConstraint>& constraints, kernels::Exec exec) {
  AssignmentSearchResult out;
  std::map<std::string, std::size_t> index;
  for (const auto& c : constraints) {
    if (c.required != 1 && c.required != -1) throw Error("required product must be +1 or -1");
    for (const auto& s : c.symbols) {
      if (index.emplace(s.name, out.variables.size()).second) out.variables.push_back(s.name);
    }
  }
  const std::size_t n = out.variables.size();
  if (n > kMaxParityVariables) {
    throw Error("parity search supports at most " + std::to_string(kMaxParityVariables) + " variables, got " +
                std::to_string(n));
  }
  std::vector<std::uint32_t> masks;
  std::vector<bool> odd;
  for (const auto& c : constraints) {
    std::uint32_t mask = 0;
    bool negative = c.required < 0;
    for (const auto& s : c.symbols) {
      mask ^= std::uint32_t{1} << index.at(s.name);
      negative ^= s.negated;
    }
    masks.push_back(mask);
    odd.push_back(negative);
  }
  out.domain_size = std::uint64_t{1} << n;
  const bool parallel = exec == kernels::Exec::kParallel ||
                        (exec == kernels::Exec::kAuto && out.domain_size >= kernels::kParallelThreshold);
  const auto found = parallel ? detail::satisfying_parallel(masks, odd, n) : detail::satisfying_serial(masks, odd, n);
  for (std::uint32_t a : found) {
    std::vector<int> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (a >> k) & 1u ? -1 : 1;
    out.satisfying.push_back(std::move(v));
  }
  if (found.empty()) {
    const auto cert = inconsistency_certificate(masks, odd, n);
    if (!cert) throw Error("internal: empty search without a GF(2) certificate");
    FormalProduct f;
    f.certificate = *cert;
    std::vector<int> count(n, 0);
    int sign = 1;
    for (std::size_t c : *cert) {
      sign *= constraints[c].required;
      for (const auto& s : constraints[c].symbols) {
        ++count[index.at(s.name)];
        if (s.negated) sign = -sign;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (count[k] > 0) f.half_monomial.emplace_back(out.variables[k], count[k] / 2);
    }
    f.square = sign;
    out.formal_product = std::move(f);
  }
  return out;
}

}  // namespace wfcheck::checks
