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

// Serial reference vs OpenMP kernels on random inputs.

#include <random>

#include "gtest/gtest.h"
#include "test_util.h"
#include "wfcheck/qcore/kernels.h"

namespace wfcheck {
namespace {

namespace k = kernels;

struct Case {
  SpaceLayout layout;
  std::vector<std::string> inner;
};

std::vector<Case> cases() {
  return {
      {SpaceLayout({{"a", 2}, {"b", 2}, {"c", 2}}), {"b"}},
      {SpaceLayout({{"a", 3}, {"b", 2}, {"c", 4}}), {"c", "a"}},
      {SpaceLayout({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}, {"e", 2}, {"f", 2}, {"g", 2}, {"h", 2},
                    {"i", 2}, {"j", 2}, {"k", 2}, {"l", 2}}),
       {"d", "k"}},
  };
}

TEST(Kernels, ApplyLocalMatchesReference) {
  std::mt19937_64 rng(11);
  for (const auto& c : cases()) {
    const auto split = split_indices(c.layout, c.inner);
    const auto u = testing::random_unitary_matrix(rng, split.inner_dim());
    const auto in = testing::random_vector(rng, c.layout.total_dimension());
    std::vector<Complex> a(in.size()), b(in.size());
    k::serial::apply_local(u, split, in, a);
    k::parallel::apply_local(u, split, in, b);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-12);
  }
}

TEST(Kernels, ProbabilitiesAndProjectionMatchReference) {
  std::mt19937_64 rng(12);
  for (const auto& c : cases()) {
    const auto split = split_indices(c.layout, c.inner);
    const auto basis = testing::random_unitary_matrix(rng, split.inner_dim());
    const auto s = testing::random_state(rng, c.layout);
    const auto ps = k::serial::basis_probabilities(basis, split, s.amplitudes());
    const auto pp = k::parallel::basis_probabilities(basis, split, s.amplitudes());
    ASSERT_EQ(ps.size(), pp.size());
    for (std::size_t j = 0; j < ps.size(); ++j) EXPECT_NEAR(ps[j], pp[j], 1e-12);

    std::vector<Complex> a(s.dimension()), b(s.dimension());
    const double ws = k::serial::project(basis.row(0), split, s.amplitudes(), a);
    const double wp = k::parallel::project(basis.row(0), split, s.amplitudes(), b);
    EXPECT_NEAR(ws, wp, 1e-12);
    EXPECT_NEAR(ws, ps[0], 1e-12);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT(std::abs(a[i] - b[i]), 1e-12);
  }
}

TEST(Kernels, ReductionsMatchReference) {
  std::mt19937_64 rng(13);
  for (const auto& c : cases()) {
    const auto split = split_indices(c.layout, c.inner);
    const auto s = testing::random_state(rng, c.layout);
    const auto rs = k::serial::reduce_pure(split, s.amplitudes());
    const auto rp = k::parallel::reduce_pure(split, s.amplitudes());
    EXPECT_LT(rs.max_abs_diff(rp), 1e-12);
  }
  const SpaceLayout small({{"a", 3}, {"b", 4}});
  const auto split = split_indices(small, std::vector<std::string>{"b"});
  const auto m = testing::random_unitary_matrix(rng, 12);
  EXPECT_LT(k::serial::reduce_mixed(split, m).max_abs_diff(k::parallel::reduce_mixed(split, m)), 1e-12);
  const auto m2 = testing::random_unitary_matrix(rng, 12);
  EXPECT_LT(k::serial::multiply(m, m2).max_abs_diff(k::parallel::multiply(m, m2)), 1e-12);
}

TEST(Kernels, ParallelReductionIsReproducible) {
  std::mt19937_64 rng(14);
  const auto all = cases();
  const auto& c = all.back();
  const auto split = split_indices(c.layout, c.inner);
  const auto basis = testing::random_unitary_matrix(rng, split.inner_dim());
  const auto s = testing::random_state(rng, c.layout);
  const auto first = k::parallel::basis_probabilities(basis, split, s.amplitudes());
  for (int rep = 0; rep < 5; ++rep) {
    EXPECT_EQ(k::parallel::basis_probabilities(basis, split, s.amplitudes()), first);
  }
}

TEST(Kernels, ShapeMismatchIsAnError) {
  const SpaceLayout l({{"a", 2}, {"b", 2}});
  const auto split = split_indices(l, std::vector<std::string>{"a"});
  std::vector<Complex> in(4), out(4);
  EXPECT_THROW(k::serial::apply_local(Matrix::identity(3), split, in, out), Error);
  EXPECT_THROW(k::parallel::apply_local(Matrix::identity(3), split, in, out), Error);
}

}  // namespace
}  // namespace wfcheck
