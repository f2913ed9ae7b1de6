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

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "wfcheck/checks/parity.h"
#include "wfcheck/qcore/kernels.h"

namespace {

using namespace wfcheck;

// n qubits, the local operator acting on the middle pair.
struct Fixture {
  SpaceLayout layout;
  IndexSplit split;
  std::vector<Complex> state;
  Matrix u;

  explicit Fixture(std::size_t n) {
    std::vector<Subsystem> subs;
    for (std::size_t k = 0; k < n; ++k) subs.push_back({"q" + std::to_string(k), 2});
    layout = SpaceLayout(subs);
    const std::vector<std::string> inner{"q" + std::to_string(n / 2), "q" + std::to_string(n / 2 + 1)};
    split = split_indices(layout, inner);
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    state.resize(layout.total_dimension());
    for (auto& x : state) x = {g(rng), g(rng)};
    u = Matrix(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) u(i, j) = {g(rng), g(rng)};
    }
  }
};

template <kernels::Exec E>
void BM_ApplyLocal(benchmark::State& st) {
  Fixture f(static_cast<std::size_t>(st.range(0)));
  std::vector<Complex> out(f.state.size());
  for (auto _ : st) {
    kernels::apply_local(f.u, f.split, f.state, out, E);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.state.size()));
}

template <kernels::Exec E>
void BM_BasisProbabilities(benchmark::State& st) {
  Fixture f(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::basis_probabilities(f.u, f.split, f.state, E));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.state.size()));
}

template <kernels::Exec E>
void BM_ReducePure(benchmark::State& st) {
  Fixture f(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::reduce_pure(f.split, f.state, E));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(f.state.size()));
}

template <kernels::Exec E>
void BM_ParitySearch(benchmark::State& st) {
  const auto n = static_cast<int>(st.range(0));
  std::vector<checks::ParityConstraint> cs;
  for (int k = 0; k + 2 < n; ++k) {
    cs.push_back({{{"x" + std::to_string(k)}, {"x" + std::to_string(k + 1)}, {"x" + std::to_string(k + 2)}},
                  k % 2 ? 1 : -1,
                  ""});
  }
  for (auto _ : st) benchmark::DoNotOptimize(checks::parity_search(cs, E));
  st.SetItemsProcessed(st.iterations() * (std::int64_t{1} << n));
}

constexpr auto kSerial = kernels::Exec::kSerial;
constexpr auto kParallel = kernels::Exec::kParallel;

BENCHMARK(BM_ApplyLocal<kSerial>)->DenseRange(10, 18, 4);
BENCHMARK(BM_ApplyLocal<kParallel>)->DenseRange(10, 18, 4);
BENCHMARK(BM_BasisProbabilities<kSerial>)->DenseRange(10, 18, 4);
BENCHMARK(BM_BasisProbabilities<kParallel>)->DenseRange(10, 18, 4);
BENCHMARK(BM_ReducePure<kSerial>)->DenseRange(10, 18, 4);
BENCHMARK(BM_ReducePure<kParallel>)->DenseRange(10, 18, 4);
BENCHMARK(BM_ParitySearch<kSerial>)->Arg(12)->Arg(18);
BENCHMARK(BM_ParitySearch<kParallel>)->Arg(12)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
