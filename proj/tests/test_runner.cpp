// Copyright 2026 The halfinfo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include <gtest/gtest.h>

#include "halfinfo/reference_states.hpp"
#include "halfinfo/runner.hpp"

namespace halfinfo {
namespace {

namespace ref = reference;

double closed_form(int n, int k) {
  const double s = std::sin((2 * k + 1) * std::asin(std::pow(2.0, -0.5 * n)));
  return s * s;
}

RunOptions bob_first(const std::string& choice, std::uint64_t seed = 1) {
  RunOptions o;
  o.bob_choice = BitString::parse(choice);
  o.seed = seed;
  return o;
}

TEST(Grover, IterationCounts) {
  EXPECT_EQ(default_grover_iterations(2), 1);
  EXPECT_EQ(default_grover_iterations(3), 2);
  EXPECT_EQ(default_grover_iterations(4), 3);
  EXPECT_EQ(default_grover_iterations(10), 25);
}

TEST(Grover, RelativeStagesOfTwoQubitSearch) {
  const AlgorithmTrace t = run_grover(2, bob_first("00"));
  EXPECT_NEAR(density_distance(t.relative_at(Stage::Initial), ref::search_initial_state()), 0.0, 1e-10);
  EXPECT_NEAR(density_distance(t.relative_at(Stage::AfterOracle), ref::search_after_oracle()), 0.0, 1e-10);
  EXPECT_NEAR(density_distance(t.relative_at(Stage::AfterUA), ref::search_output()), 0.0, 1e-10);
  EXPECT_NEAR(density_distance(t.relative_at(Stage::AfterAliceMeasure), ref::search_solution_eigenstate()), 0.0,
              1e-10);
  EXPECT_EQ(t.evaluations, 1);
  EXPECT_TRUE(t.success);
  EXPECT_EQ(t.answer, "00");
}

TEST(Grover, PhysicalStagesAreSharpAfterBob) {
  const AlgorithmTrace t = run_grover(2, bob_first("10"));
  EXPECT_NEAR(b_entropy(t.at(Stage::Initial)), 2.0, 1e-9);
  EXPECT_NEAR(b_entropy(t.at(Stage::AfterBobMeasure)), 0.0, 1e-9);
  EXPECT_NEAR(b_entropy(t.at(Stage::AfterOracle)), 0.0, 1e-9);
  EXPECT_EQ(t.bob_outcome, 2u);
  EXPECT_EQ(t.alice_outcome, 2u);
  EXPECT_NEAR(t.success_probability, 1.0, 1e-12);
}

TEST(Grover, BobLastLeavesBCorrelatedWithA) {
  RunOptions o;
  o.order = MeasurementOrder::BobLast;
  o.seed = 4;
  const AlgorithmTrace t = run_grover(2, o);
  const PhaseTaggedState& pre = t.at(Stage::AfterUA);
  EXPECT_NEAR(frobenius_distance(reduced_density(pre, Register::B | Register::A),
                                 reduced_density(ref::bare_correlated_state(), Register::B | Register::A)),
              0.0, 1e-10);
  EXPECT_EQ(t.alice_outcome, t.bob_outcome);
  EXPECT_TRUE(t.success);
}

TEST(Grover, ChoiceWithBobLastIsRejected) {
  RunOptions o = bob_first("00");
  o.order = MeasurementOrder::BobLast;
  EXPECT_THROW(run_grover(2, o), std::invalid_argument);
  EXPECT_THROW(run_grover(2, bob_first("111")), std::invalid_argument);
  EXPECT_THROW(run_grover(12, RunOptions{}), std::invalid_argument);
}

TEST(Grover, SameSeedSameTrace) {
  RunOptions o;
  o.seed = 99;
  const AlgorithmTrace a = run_grover(4, o);
  const AlgorithmTrace b = run_grover(4, o);
  EXPECT_EQ(a.bob_selection, b.bob_selection);
  EXPECT_EQ(a.alice_outcome, b.alice_outcome);
  EXPECT_EQ(a.success_probability, b.success_probability);
}

TEST(Grover, SuccessMatchesClosedForm) {
  for (int n = 3; n <= 6; ++n) {
    const int k = default_grover_iterations(n);
    const AlgorithmTrace t = run_grover(n, bob_first(std::string(n, '1')));
    EXPECT_NEAR(t.success_probability, closed_form(n, k), 1e-9) << n;
    EXPECT_GE(t.success_probability, 1.0 - std::pow(2.0, -n));
    EXPECT_EQ(t.evaluations, k);
  }
  const auto curve = grover_success_curve(4, 8, 7);
  for (int k = 1; k <= 8; ++k) EXPECT_NEAR(curve[k - 1], closed_form(4, k), 1e-9);
  EXPECT_NEAR(curve[2], 0.96131, 1e-5);
}

TEST(Grover, ExplicitIterationOverride) {
  const AlgorithmTrace t = run_grover(3, bob_first("010"), 1);
  EXPECT_EQ(t.evaluations, 1);
  EXPECT_NEAR(t.success_probability, closed_form(3, 1), 1e-9);
}

TEST(DeutschJozsa, ClassifiesEveryTable) {
  const ProblemFamily d = build_family("dj", 2);
  for (const auto& table : d.tables()) {
    RunOptions o;
    o.bob_choice = table.index;
    const AlgorithmTrace t = run_dj(2, o);
    EXPECT_TRUE(t.success) << table.index.str();
    EXPECT_NEAR(t.success_probability, 1.0, 1e-12);
    EXPECT_EQ(t.answer, d.solution(d.index_of(table.index)));
  }
}

TEST(Simon, RecoversThePeriod) {
  const ProblemFamily s = build_family("simon", 3);
  for (std::size_t t = 0; t < s.size(); t += 7) {
    RunOptions o;
    o.bob_choice = s.table(t).index;
    o.seed = t;
    const SimonRun run = run_simon(s, o);
    ASSERT_TRUE(run.h.has_value());
    EXPECT_EQ(run.h->str(), s.solution(t));
    EXPECT_GE(run.evaluations, 2);
    for (const auto& str : run.strings) EXPECT_EQ(dot_mod2(str.bits, run.h->bits), 0);
  }
}

TEST(Permutation, TablesLandInTheirClass) {
  const ProblemFamily p = build_family("perm", 2);
  const std::vector<int> classes = partition_of(p);
  for (std::size_t t = 0; t < p.size(); ++t) {
    RunOptions o;
    o.bob_choice = p.table(t).index;
    const PermRun run = run_perm(o);
    EXPECT_EQ(run.partition, classes[t]);
    EXPECT_NE(run.trace.alice_outcome, 0u);
  }
}

TEST(Deferred, BothOrdersGiveTheSameJointDistribution) {
  const ProblemFamily g = build_family("grover", 2);
  const Schedule s = default_schedule(g);
  const DeferredReport plain = deferred_equivalence(g, s, 16, 3);
  EXPECT_TRUE(plain.equal);
  EXPECT_LE(plain.max_difference, 1e-12);
  for (BasisIndex x = 0; x < 4; ++x) EXPECT_NEAR(plain.bob_first.at({x, x}), 0.25, 1e-12);
  EXPECT_EQ(plain.trials_in_support, plain.trials);

  const DeferredReport swapped =
      deferred_equivalence(g, s, 16, 3, std::make_pair(BitString::parse("00"), BitString::parse("01")));
  EXPECT_TRUE(swapped.equal);
  EXPECT_NEAR(swapped.bob_first.at({0, 1}), 0.25, 1e-12);
  EXPECT_NEAR(swapped.bob_first.at({1, 0}), 0.25, 1e-12);
}

TEST(Deferred, HoldsForDeutschJozsa) {
  const ProblemFamily d = build_family("dj", 2);
  EXPECT_TRUE(deferred_equivalence(d, default_schedule(d), 8, 5).equal);
}

}  // namespace
}  // namespace halfinfo
