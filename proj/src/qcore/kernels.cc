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

#include "wfcheck/qcore/kernels.h"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wfcheck::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void check_square(const Matrix& u, std::size_t dim) {
  if (u.rows() != dim || u.cols() != dim) throw Error("local operator does not match the split");
}

void check_state(const IndexSplit& split, std::size_t size) {
  if (split.inner_dim() * split.outer_dim() != size) throw Error("state does not match the split");
}

// [begin, end) of fixed block `b` out of kReductionBlocks over n items.
std::pair<std::size_t, std::size_t> block_range(std::size_t b, std::size_t n) {
  return {b * n / kReductionBlocks, (b + 1) * n / kReductionBlocks};
}

}  // namespace

// ---------------------------------------------------------------- serial ---

namespace serial {

void apply_local(const Matrix& u, const IndexSplit& split, std::span<const Complex> in,
                 std::span<Complex> out) {
  const std::size_t di = split.inner_dim();
  check_square(u, di);
  check_state(split, in.size());
  check_state(split, out.size());
  for (std::size_t o = 0; o < split.outer_dim(); ++o) {
    const std::size_t base = split.outer_offsets[o];
    for (std::size_t r = 0; r < di; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < di; ++c) acc += u(r, c) * in[base + split.inner_offsets[c]];
      out[base + split.inner_offsets[r]] = acc;
    }
  }
}

std::vector<double> basis_probabilities(const Matrix& basis, const IndexSplit& split,
                                        std::span<const Complex> state) {
  check_state(split, state.size());
  if (basis.cols() != split.inner_dim()) throw Error("basis does not match the split");
  std::vector<double> probs(basis.rows(), 0.0);
  for (std::size_t j = 0; j < basis.rows(); ++j) {
    for (std::size_t o = 0; o < split.outer_dim(); ++o) {
      const std::size_t base = split.outer_offsets[o];
      Complex amp = 0.0;
      for (std::size_t t = 0; t < split.inner_dim(); ++t) {
        amp += std::conj(basis(j, t)) * state[base + split.inner_offsets[t]];
      }
      probs[j] += std::norm(amp);
    }
  }
  return probs;
}

double project(std::span<const Complex> b, const IndexSplit& split, std::span<const Complex> in,
               std::span<Complex> out) {
  check_state(split, in.size());
  check_state(split, out.size());
  if (b.size() != split.inner_dim()) throw Error("projector does not match the split");
  double weight = 0.0;
  for (std::size_t o = 0; o < split.outer_dim(); ++o) {
    const std::size_t base = split.outer_offsets[o];
    Complex amp = 0.0;
    for (std::size_t t = 0; t < b.size(); ++t) amp += std::conj(b[t]) * in[base + split.inner_offsets[t]];
    for (std::size_t t = 0; t < b.size(); ++t) out[base + split.inner_offsets[t]] = b[t] * amp;
    weight += std::norm(amp);
  }
  return weight;
}

Matrix reduce_pure(const IndexSplit& split, std::span<const Complex> state) {
  check_state(split, state.size());
  const std::size_t di = split.inner_dim();
  Matrix rho(di, di);
  for (std::size_t r = 0; r < di; ++r) {
    for (std::size_t c = 0; c < di; ++c) {
      Complex acc = 0.0;
      for (std::size_t o = 0; o < split.outer_dim(); ++o) {
        const std::size_t base = split.outer_offsets[o];
        acc += state[base + split.inner_offsets[r]] * std::conj(state[base + split.inner_offsets[c]]);
      }
      rho(r, c) = acc;
    }
  }
  return rho;
}

Matrix reduce_mixed(const IndexSplit& split, const Matrix& rho) {
  check_state(split, rho.rows());
  const std::size_t di = split.inner_dim();
  Matrix out(di, di);
  for (std::size_t r = 0; r < di; ++r) {
    for (std::size_t c = 0; c < di; ++c) {
      Complex acc = 0.0;
      for (std::size_t o = 0; o < split.outer_dim(); ++o) {
        const std::size_t base = split.outer_offsets[o];
        acc += rho(base + split.inner_offsets[r], base + split.inner_offsets[c]);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex s = a(r, k);
      if (s == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += s * b(k, c);
    }
  }
  return out;
}

std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw Error("matrix-vector shape mismatch");
  std::vector<Complex> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace serial

// -------------------------------------------------------------- parallel ---

namespace parallel {

void apply_local(const Matrix& u, const IndexSplit& split, std::span<const Complex> in,
                 std::span<Complex> out) {
  const std::size_t di = split.inner_dim();
  check_square(u, di);
  check_state(split, in.size());
  check_state(split, out.size());
  const auto outer = static_cast<std::ptrdiff_t>(split.outer_dim());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t o = 0; o < outer; ++o) {
    const std::size_t base = split.outer_offsets[o];
    for (std::size_t r = 0; r < di; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < di; ++c) acc += u(r, c) * in[base + split.inner_offsets[c]];
      out[base + split.inner_offsets[r]] = acc;
    }
  }
}

std::vector<double> basis_probabilities(const Matrix& basis, const IndexSplit& split,
                                        std::span<const Complex> state) {
  check_state(split, state.size());
  if (basis.cols() != split.inner_dim()) throw Error("basis does not match the split");
  const std::size_t nb = basis.rows();
  const std::size_t no = split.outer_dim();
  std::vector<double> partial(kReductionBlocks * nb, 0.0);
  const auto blocks = static_cast<std::ptrdiff_t>(kReductionBlocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
    const auto [begin, end] = block_range(blk, no);
    for (std::size_t o = begin; o < end; ++o) {
      const std::size_t base = split.outer_offsets[o];
      for (std::size_t j = 0; j < nb; ++j) {
        Complex amp = 0.0;
        for (std::size_t t = 0; t < split.inner_dim(); ++t) {
          amp += std::conj(basis(j, t)) * state[base + split.inner_offsets[t]];
        }
        partial[blk * nb + j] += std::norm(amp);
      }
    }
  }
  std::vector<double> probs(nb, 0.0);
  for (std::size_t blk = 0; blk < kReductionBlocks; ++blk) {
    for (std::size_t j = 0; j < nb; ++j) probs[j] += partial[blk * nb + j];
  }
  return probs;
}

double project(std::span<const Complex> b, const IndexSplit& split, std::span<const Complex> in,
               std::span<Complex> out) {
  check_state(split, in.size());
  check_state(split, out.size());
  if (b.size() != split.inner_dim()) throw Error("projector does not match the split");
  const std::size_t no = split.outer_dim();
  std::vector<double> partial(kReductionBlocks, 0.0);
  const auto blocks = static_cast<std::ptrdiff_t>(kReductionBlocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < blocks; ++blk) {
    const auto [begin, end] = block_range(blk, no);
    for (std::size_t o = begin; o < end; ++o) {
      const std::size_t base = split.outer_offsets[o];
      Complex amp = 0.0;
      for (std::size_t t = 0; t < b.size(); ++t) amp += std::conj(b[t]) * in[base + split.inner_offsets[t]];
      for (std::size_t t = 0; t < b.size(); ++t) out[base + split.inner_offsets[t]] = b[t] * amp;
      partial[blk] += std::norm(amp);
    }
  }
  double weight = 0.0;
  for (double p : partial) weight += p;
  return weight;
}

Matrix reduce_pure(const IndexSplit& split, std::span<const Complex> state) {
  check_state(split, state.size());
  const std::size_t di = split.inner_dim();
  Matrix rho(di, di);
  const auto cells = static_cast<std::ptrdiff_t>(di * di);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    const std::size_t r = cell / di;
    const std::size_t c = cell % di;
    Complex acc = 0.0;
    for (std::size_t o = 0; o < split.outer_dim(); ++o) {
      const std::size_t base = split.outer_offsets[o];
      acc += state[base + split.inner_offsets[r]] * std::conj(state[base + split.inner_offsets[c]]);
    }
    rho(r, c) = acc;
  }
  return rho;
}

Matrix reduce_mixed(const IndexSplit& split, const Matrix& rho) {
  check_state(split, rho.rows());
  const std::size_t di = split.inner_dim();
  Matrix out(di, di);
  const auto cells = static_cast<std::ptrdiff_t>(di * di);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    const std::size_t r = cell / di;
    const std::size_t c = cell % di;
    Complex acc = 0.0;
    for (std::size_t o = 0; o < split.outer_dim(); ++o) {
      const std::size_t base = split.outer_offsets[o];
      acc += rho(base + split.inner_offsets[r], base + split.inner_offsets[c]);
    }
    out(r, c) = acc;
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex s = a(r, k);
      if (s == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += s * b(k, c);
    }
  }
  return out;
}

std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw Error("matrix-vector shape mismatch");
  std::vector<Complex> out(a.rows());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

}  // namespace parallel

// -------------------------------------------------------------- dispatch ---

namespace {

bool use_parallel(Exec exec, std::size_t work) {
  switch (exec) {
    case Exec::kSerial:
      return false;
    case Exec::kParallel:
      return true;
    case Exec::kAuto:
      return work >= kParallelThreshold;
  }
  return false;
}

}  // namespace

void apply_local(const Matrix& u, const IndexSplit& split, std::span<const Complex> in,
                 std::span<Complex> out, Exec exec) {
  if (use_parallel(exec, in.size() * split.inner_dim())) {
    parallel::apply_local(u, split, in, out);
  } else {
    serial::apply_local(u, split, in, out);
  }
}

std::vector<double> basis_probabilities(const Matrix& basis, const IndexSplit& split,
                                        std::span<const Complex> state, Exec exec) {
  if (use_parallel(exec, state.size() * basis.rows())) {
    return parallel::basis_probabilities(basis, split, state);
  }
  return serial::basis_probabilities(basis, split, state);
}

double project(std::span<const Complex> b, const IndexSplit& split, std::span<const Complex> in,
               std::span<Complex> out, Exec exec) {
  if (use_parallel(exec, in.size())) return parallel::project(b, split, in, out);
  return serial::project(b, split, in, out);
}

Matrix reduce_pure(const IndexSplit& split, std::span<const Complex> state, Exec exec) {
  if (use_parallel(exec, state.size() * split.inner_dim())) {
    return parallel::reduce_pure(split, state);
  }
  return serial::reduce_pure(split, state);
}

Matrix reduce_mixed(const IndexSplit& split, const Matrix& rho, Exec exec) {
  if (use_parallel(exec, rho.rows() * split.inner_dim())) return parallel::reduce_mixed(split, rho);
  return serial::reduce_mixed(split, rho);
}

Matrix multiply(const Matrix& a, const Matrix& b, Exec exec) {
  if (use_parallel(exec, a.rows() * b.cols())) return parallel::multiply(a, b);
  return serial::multiply(a, b);
}

std::vector<Complex> multiply(const Matrix& a, std::span<const Complex> v, Exec exec) {
  if (use_parallel(exec, a.rows() * a.cols())) return parallel::multiply(a, v);
  return serial::multiply(a, v);
}

}  // namespace wfcheck::kernels
