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

// Dense kernels behind qcore. Every kernel exists twice: `serial` is the
// straightforward reference, `parallel` is the OpenMP version. The dispatching
// overloads at the bottom pick one according to Exec.
//
// Parallel reductions use a fixed block decomposition (independent of the
// thread count) and combine block partials in order, so results are bitwise
// reproducible from run to run.

#include <cstddef>
#include <span>
#include <vector>

#include "wfcheck/qcore/layout.h"
#include "wfcheck/qcore/linalg.h"

namespace wfcheck::kernels {

enum class Exec { kSerial, kParallel, kAuto };

/// Work size (inner * outer) from which kAuto switches to the parallel path.
inline constexpr std::size_t kParallelThreshold = 4096;

/// Number of fixed reduction blocks used by the parallel path.
inline constexpr std::size_t kReductionBlocks = 64;

/// True when the library was built with OpenMP.
bool openmp_enabled();
int max_threads();

namespace serial {

// out = (U on inner) * in. U is inner_dim x inner_dim.
void apply_local(const Matrix& u, const IndexSplit& split, std::span<const Complex> in,
                 std::span<Complex> out);
// p_j = sum_o |<b_j|psi_o>|^2 for each row b_j of `basis`.
std::vector<double> basis_probabilities(const Matrix& basis, const IndexSplit& split,
                                        std::span<const Complex> state);
// out = (|b><b| on inner) * in, unnormalized. Returns ||out||^2.
double project(std::span<const Complex> b, const IndexSplit& split, std::span<const Complex> in,
               std::span<Complex> out);
// Reduced density matrix over the inner subsystems of a pure state.
Matrix reduce_pure(const IndexSplit& split, std::span<const Complex> state);
// Reduced density matrix over the inner subsystems of a density matrix.
Matrix reduce_mixed(const IndexSplit& split, const Matrix& rho);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> v);

}  // namespace serial

namespace parallel {

void apply_local(const Matrix& u, const IndexSplit& split, std::span<const Complex> in,
                 std::span<Complex> out);
std::vector<double> basis_probabilities(const Matrix& basis, const IndexSplit& split,
                                        std::span<const Complex> state);
double project(std::span<const Complex> b, const IndexSplit& split, std::span<const Complex> in,
               std::span<Complex> out);
Matrix reduce_pure(const IndexSplit& split, std::span<const Complex> state);
Matrix reduce_mixed(const IndexSplit& split, const Matrix& rho);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> v);

}  // namespace parallel

void apply_local(const Matrix& u, const IndexSplit& split, std::span<const Complex> in,
                 std::span<Complex> out, Exec exec = Exec::kAuto);
std::vector<double> basis_probabilities(const Matrix& basis, const IndexSplit& split,
                                        std::span<const Complex> state, Exec exec = Exec::kAuto);
double project(std::span<const Complex> b, const IndexSplit& split, std::span<const Complex> in,
               std::span<Complex> out, Exec exec = Exec::kAuto);
Matrix reduce_pure(const IndexSplit& split, std::span<const Complex> state,
                   Exec exec = Exec::kAuto);
Matrix reduce_mixed(const IndexSplit& split, const Matrix& rho, Exec exec = Exec::kAuto);
Matrix multiply(const Matrix& a, const Matrix& b, Exec exec = Exec::kAuto);
std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> v,
                              Exec exec = Exec::kAuto);

}  // namespace wfcheck::kernels
