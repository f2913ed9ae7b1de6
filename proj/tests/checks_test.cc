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

#include <cmath>
#include <map>
#include <random>

#include "gtest/gtest.h"
#include "wfcheck/checks/checks.h"

namespace wfcheck::checks {
namespace {

using interpret::FactHolderPolicy;

// Rank over GF(2) of the rows, plain row reduction on int vectors.
std::size_t gf2_rank(std::vector<std::vector<int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

struct Oracle {
  bool consistent;
  std::uint64_t count;
};

// Solutions exist iff rank(A) == rank(A|b); then there are 2^(n - rank).
Oracle gf2_oracle(const std::vector<ParityConstraint>& cs, const std::vector<std::string>& vars) {
  std::map<std::string, std::size_t> at;
  for (std::size_t k = 0; k < vars.size(); ++k) at[vars[k]] = k;
  std::vector<std::vector<int>> a, ab;
  for (const auto& c : cs) {
    std::vector<int> row(vars.size() + 1, 0);
    int sign = c.required;
    for (const auto& s : c.symbols) {
      row[at.at(s.name)] ^= 1;
      if (s.negated) sign = -sign;
    }
    row.back() = sign < 0 ? 1 : 0;
    ab.push_back(row);
    row.pop_back();
    a.push_back(row);
  }
  const std::size_t ra = gf2_rank(a);
  const bool ok = ra == gf2_rank(ab);
  return {ok, ok ? std::uint64_t{1} << (vars.size() - ra) : 0};
}

std::vector<ParityConstraint> random_system(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<ParityConstraint> out;
  std::uniform_int_distribution<int> len(1, 5), bit(0, 1);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (std::size_t c = 0; c < m; ++c) {
    ParityConstraint p;
    const int l = len(rng);
    for (int k = 0; k < l; ++k) p.symbols.push_back({"x" + std::to_string(var(rng)), bit(rng) == 1});
    p.required = bit(rng) ? 1 : -1;
    out.push_back(p);
  }
  return out;
}

bool satisfies(const std::vector<ParityConstraint>& cs, const std::vector<std::string>& vars,
               const std::vector<int>& a) {
  for (const auto& c : cs) {
    int prod = 1;
    for (const auto& s : c.symbols) {
      const auto k = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), s.name) - vars.begin());
      prod *= s.negated ? -a[k] : a[k];
    }
    if (prod != c.required) return false;
  }
  return true;
}

TEST(ParitySearch, SingleConstraint) {
  const auto r = parity_search({{{{"x"}}, 1, ""}});
  EXPECT_EQ(r.domain_size, 2u);
  ASSERT_EQ(r.satisfying.size(), 1u);
  EXPECT_EQ(r.satisfying[0], std::vector<int>{1});
  EXPECT_FALSE(r.formal_product);
}

TEST(ParitySearch, EmptyConstraintOverThreeVariables) {
  ParityConstraint trivial;
  trivial.symbols = {{"a"}, {"a"}, {"b"}, {"b"}, {"c"}, {"c"}};
  const auto r = parity_search({trivial});
  EXPECT_EQ(r.domain_size, 8u);
  EXPECT_EQ(r.satisfying.size(), 8u);
}

TEST(ParitySearch, RejectsLargeOrMalformedSystems) {
  ParityConstraint big;
  for (int k = 0; k < 21; ++k) big.symbols.push_back({"v" + std::to_string(k)});
  EXPECT_THROW(parity_search({big}), Error);
  EXPECT_THROW(parity_search({{{{"x"}}, 0, ""}}), Error);
}

TEST(ParitySearch, StringForm) {
  EXPECT_EQ(ghz_constraints_full()[1].str(), "B1*A2*A3 = -1");
  EXPECT_EQ(ghz_constraints_substituted()[0].str(), "-A1*A1*A2*A2*A3*A3 = +1");
}

TEST(ParitySearch, MatchesGf2OracleOnRandomSystems) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> nd(1, 10), md(1, 12);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto cs = random_system(rng, nd(rng), md(rng));
    const auto r = parity_search(cs);
    const Oracle o = gf2_oracle(cs, r.variables);
    ASSERT_EQ(r.satisfying.size(), o.count) << "trial " << trial;
    ASSERT_EQ(!r.satisfying.empty(), o.consistent);
    for (const auto& a : r.satisfying) ASSERT_TRUE(satisfies(cs, r.variables, a));
    if (!o.consistent) {
      // The certificate multiplies to a perfect square with a negative value.
      ASSERT_TRUE(r.formal_product);
      std::map<std::string, int> count;
      int sign = 1;
      for (std::size_t c : r.formal_product->certificate) {
        sign *= cs[c].required;
        for (const auto& s : cs[c].symbols) {
          ++count[s.name];
          if (s.negated) sign = -sign;
        }
      }
      for (const auto& [name, n] : count) ASSERT_EQ(n % 2, 0) << name;
      ASSERT_EQ(sign, -1);
      ASSERT_EQ(r.formal_product->square, -1);
    }
  }
}

TEST(ParitySearch, SerialAndParallelAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto cs = random_system(rng, 16, 3);
    const auto s = parity_search(cs, kernels::Exec::kSerial);
    const auto p = parity_search(cs, kernels::Exec::kParallel);
    ASSERT_EQ(s.satisfying, p.satisfying);
  }
}

TEST(CplCheck, DefiniteStateIsConsistent) {
  const auto r = cpl_probability_check({1.0, 0.0}, 0);
  EXPECT_EQ(r.verdict, Verdict::kConsistent);
  EXPECT_NEAR(r.finding("P(r_b != r_a)").value("rqm5"), 0.0, 1e-15);
}

TEST(CplCheck, UniformQubit) {
  const double h = std::sqrt(0.5);
  const auto r = cpl_probability_check({h, h}, 0);
  const auto& f = r.finding("P(r_b != r_a)");
  EXPECT_NEAR(f.value("rqm5"), 0.5, 1e-12);
  EXPECT_NEAR(f.value("closed_form"), 0.5, 1e-12);
  EXPECT_EQ(f.value("cpl"), 0.0);
  EXPECT_NEAR(f.discrepancy, 0.5, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::kContradiction);
}

TEST(CplCheck, UnequalQubit) {
  const auto r = cpl_probability_check({std::sqrt(0.3), std::sqrt(0.7)}, 1);
  const auto& f = r.finding("P(r_b != r_a)");
  EXPECT_NEAR(f.value("rqm5"), 0.3, 1e-12);
  EXPECT_NEAR(f.value("rqm5_engine"), 0.3, 1e-12);
  EXPECT_LT(r.finding("Alice's reduced state is unchanged by Bob's interaction").discrepancy, 1e-12);
}

TEST(CplCheck, ComplexCoefficientsInHigherDimension) {
  const std::vector<Complex> c{{0.5, 0.0}, {0.0, 0.5}, {-0.5, 0.0}, {0.0, -0.5}};
  for (std::size_t ra = 0; ra < 4; ++ra) {
    EXPECT_NEAR(cpl_probability_check(c, ra).finding("P(r_b != r_a)").value("rqm5"), 0.75, 1e-12);
  }
}

TEST(CplCheck, RejectsBadInput) {
  EXPECT_THROW(cpl_probability_check({1.0, 1.0}, 0), Error);
  EXPECT_THROW(cpl_probability_check({1.0, 0.0}, 2), Error);
  EXPECT_THROW(cpl_probability_check({1.0}, 0), Error);
}

TEST(EprCheck, ThirtySeventy) {
  const auto r = epr_correlation_check(std::sqrt(0.3), std::sqrt(0.7));
  const auto& f = r.finding("P(r_a = r_b)");
  EXPECT_NEAR(f.value("orthodox"), 1.0, 1e-12);
  EXPECT_NEAR(f.value("rqm5_separate"), 0.58, 1e-12);
  EXPECT_NEAR(f.value("rqm5_joint"), 1.0, 1e-12);
  EXPECT_NEAR(f.discrepancy, 0.42, 1e-12);
  EXPECT_EQ(r.verdict, Verdict::kAmbiguity);
  EXPECT_LT(r.finding("conditioning on r_a leaves P(r_b) unchanged under rqm5").discrepancy, 1e-12);
}

TEST(EprCheck, SeparatePolicyIsSumOfFourthPowers) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.05, 0.45);
  for (int k = 0; k < 10; ++k) {
    const double p = u(rng);
    const auto r = epr_correlation_check(std::sqrt(p), std::sqrt(1 - p));
    EXPECT_NEAR(r.finding("P(r_a = r_b)").value("rqm5_separate"), p * p + (1 - p) * (1 - p), 1e-12);
  }
}

TEST(EprCheck, RejectsDegenerateInput) {
  EXPECT_THROW(epr_correlation_check(1.0, 0.0), Error);
  EXPECT_THROW(epr_correlation_check(std::sqrt(0.5), std::sqrt(0.5)), Error);
  EXPECT_THROW(epr_correlation_check(0.6, 0.6), Error);
}

TEST(GhzCheck, ParitiesAndNoAssignment) {
  for (auto policy : {FactHolderPolicy::kAgentOnly, FactHolderPolicy::kBothParties}) {
    const auto r = ghz_check(policy);
    EXPECT_EQ(r.verdict, Verdict::kContradiction);
    EXPECT_NEAR(r.finding("context (B1, B2, B3): P(product = +1)").value("rqm5"), 1.0, 1e-12);
    EXPECT_NEAR(r.finding("context (B1, A2, A3): P(product = -1)").value("rqm5"), 1.0, 1e-12);
    EXPECT_NEAR(r.finding("context (A1, B2, A3): P(product = -1)").value("rqm5"), 1.0, 1e-12);
    EXPECT_NEAR(r.finding("context (A1, A2, B3): P(product = -1)").value("rqm5"), 1.0, 1e-12);
    EXPECT_LT(r.finding("branchwise B_i = -A_j*A_k with Wigner's readouts").discrepancy, 1e-12);
    EXPECT_GT(r.finding("readouts pinned to Alice's facts have zero Born weight").discrepancy, 0.1);
    ASSERT_TRUE(r.search);
    EXPECT_EQ(r.search->domain_size, 8u);
    EXPECT_TRUE(r.search->satisfying.empty());
    ASSERT_TRUE(r.search->formal_product);
    EXPECT_EQ(r.search->formal_product->value(), "+-i");
    EXPECT_EQ(r.search->formal_product->monomial(), "A1*A2*A3");
    const auto& a = r.finding("+-1 values of A1, A2, A3 satisfying all four constraints");
    EXPECT_EQ(a.value("found"), 0.0);
    EXPECT_EQ(a.value("found_with_free_B"), 0.0);
    EXPECT_EQ(a.value("domain_with_free_B"), 64.0);
  }
}

TEST(GhzCheck, PolicyDoesNotChangeFindings) {
  const auto a = ghz_check(FactHolderPolicy::kAgentOnly);
  const auto b = ghz_check(FactHolderPolicy::kBothParties);
  ASSERT_EQ(a.findings.size(), b.findings.size());
  for (std::size_t k = 0; k < a.findings.size(); ++k) {
    EXPECT_EQ(a.findings[k].claim, b.findings[k].claim);
    EXPECT_NEAR(a.findings[k].discrepancy, b.findings[k].discrepancy, 1e-12);
  }
  EXPECT_EQ(a.verdict, b.verdict);
}

TEST(Report, VerdictRequiresDiscrepancy) {
  for (const auto& r : {cpl_probability_check({1.0, 0.0}, 0), epr_correlation_check(0.6, 0.8), ghz_check()}) {
    if (r.verdict != Verdict::kConsistent) EXPECT_GT(r.max_discrepancy(), r.tolerance);
    EXPECT_THROW(r.finding("no such claim"), Error);
  }
  EXPECT_STREQ(verdict_name(Verdict::kAmbiguity), "ambiguity");
}

}  // namespace
}  // namespace wfcheck::checks
