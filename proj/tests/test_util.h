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

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wfcheck/qcore/ops.h"

namespace wfcheck::testing {

inline std::vector<Complex> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline StateVector random_state(std::mt19937_64& rng, const SpaceLayout& layout) {
  return StateVector::normalized(layout, random_vector(rng, layout.total_dimension()));
}

/// Haar-ish random unitary from Gram-Schmidt on Gaussian columns.
inline Matrix random_unitary_matrix(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<Complex>> cols;
  while (cols.size() < n) {
    auto v = random_vector(rng, n);
    for (const auto& c : cols) {
      const Complex ip = inner(c, v);
      for (std::size_t i = 0; i < n; ++i) v[i] -= ip * c[i];
    }
    const double nv = std::sqrt(norm_squared(v));
    for (auto& x : v) x /= nv;
    cols.push_back(std::move(v));
  }
  Matrix m(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

inline Unitary random_unitary(std::mt19937_64& rng, const SpaceLayout& layout) {
  return Unitary(layout, random_unitary_matrix(rng, layout.total_dimension()));
}

inline SpaceLayout qubits(std::initializer_list<const char*> ids) {
  std::vector<Subsystem> subs;
  for (const char* id : ids) subs.push_back({id, 2});
  return SpaceLayout(std::move(subs));
}

inline std::string source_dir() {
  const char* env = std::getenv("WFCHECK_SOURCE_DIR");
  return env ? env : ".";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wfcheck::testing
