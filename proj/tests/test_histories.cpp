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

#include "halfinfo/histories.hpp"

namespace halfinfo {
namespace {

std::vector<HalfTable> all_good_halves(const ProblemFamily& f) {
  std::vector<HalfTable> out;
  for (std::size_t t = 0; t < f.size(); ++t) {
    for (auto& h : enumerate_good_half_tables(f, t)) out.push_back(h);
  }
  return out;
}

ProblemFamily single_table() {
  return ProblemFamily(FamilyKind::Custom, "one", 1, 1, 2, {{BitString::parse("01"), {0, 1}}}, {"x"}, Goodness::Any,
                       VInit::Minus);
}

TEST(Histories, OneQueryTwoTables) {
  const ProblemFamily g = build_family("grover", 2);
  const auto h = enumerate_histories(g, HalfTable{0, {2, 3}}, 0, 0);
  ASSERT_EQ(h.size(), 2u);
  // b = 00 flips V at a = 00; b = 01 leaves it alone.
  EXPECT_EQ(h[0].b, 0u);
  EXPECT_EQ(h[0].initial, 0u);
  EXPECT_EQ(h[0].final, 1u);
  EXPECT_EQ(h[1].b, 1u);
  EXPECT_EQ(h[1].initial, 8u);
  EXPECT_EQ(h[1].final, 8u);
  EXPECT_THROW(enumerate_histories(g, HalfTable{0, {2, 3}}, 2, 0), std::invalid_argument);
  EXPECT_THROW(enumerate_histories(g, HalfTable{0, {2, 3}}, 0, 2), std::invalid_argument);
}

TEST(Histories, EightPerSearchHalfTable) {
  const ProblemFamily g = build_family("grover", 2);
  for (const auto& half : all_good_halves(g)) {
    EXPECT_EQ(collect_histories(g, {half}).histories.size(), 8u) << describe(g, half);
  }
}

TEST(Histories, FinalIsTheOracleImage) {
  for (auto [name, n] : {std::pair{"grover", 2}, std::pair{"dj", 2}, std::pair{"simon", 2}, std::pair{"perm", 2}}) {
    const ProblemFamily f = build_family(name, n);
    const HistorySet set = collect_histories(f, all_good_halves(f));
    const RegisterLayout& layout = f.layout();
    for (const auto& h : set.histories) {
      const std::size_t t = *f.find(h.b);
      EXPECT_EQ(static_cast<std::size_t>(h.tag), t);
      const BasisIndex v = layout.v_of(h.initial) ^ f.value(t, h.a);
      EXPECT_EQ(h.final, layout.compose(h.b, h.a, v));
    }
  }
}

TEST(Reconstruction, EveryGoodHalfTableIsSpanned) {
  for (auto [name, n] : {std::pair{"grover", 2}, std::pair{"dj", 2}, std::pair{"simon", 2}}) {
    const ProblemFamily f = build_family(name, n);
    for (const auto& half : all_good_halves(f)) {
      const Reconstruction r = span_reconstruction(f, half);
      EXPECT_LT(r.residual, 1e-10) << name << " " << describe(f, half);
      EXPECT_LT(r.linearity_residual, 1e-10);
      EXPECT_TRUE(r.ok);
    }
  }
}

TEST(Reconstruction, CoefficientsCarryTheVSign) {
  const ProblemFamily g = build_family("grover", 2);
  const HistorySet set = collect_histories(g, {HalfTable{0, {2, 3}}});
  const Reconstruction r = span_reconstruction(g, set);
  ASSERT_EQ(r.coefficients.size(), set.histories.size());
  for (std::size_t i = 0; i < set.histories.size(); ++i) {
    const double sign = g.layout().v_of(set.histories[i].initial) == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(r.coefficients[i].real(), sign * std::abs(r.coefficients[i]), 1e-12);
    EXPECT_NEAR(std::abs(r.coefficients[i]), 1.0 / std::sqrt(32.0), 1e-12);
  }
}

TEST(Reconstruction, OneQueryColumnIsEnough) {
  const ProblemFamily g = build_family("grover", 2);
  const Reconstruction r = span_reconstruction(g, HalfTable{0, {2, 3}}, 1);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(collect_histories(g, {HalfTable{0, {2, 3}}}, 1).histories.size(), 4u);
}

TEST(Reconstruction, UnionOfHalvesGivesTheFullState) {
  const ProblemFamily g = build_family("grover", 2);
  const HistorySet one = collect_histories(g, {HalfTable{0, {2, 3}}});
  EXPECT_GT(full_reconstruction(g, one).residual, 0.5);
  const HistorySet all = collect_histories(g, all_good_halves(g));
  EXPECT_EQ(all.histories.size(), 32u);
  const Reconstruction r = full_reconstruction(g, all);
  EXPECT_LT(r.residual, 1e-10);
  EXPECT_LT(r.linearity_residual, 1e-10);
}

TEST(Reconstruction, SingleTableFamily) {
  const ProblemFamily f = single_table();
  const HistorySet set = collect_histories(f, {HalfTable{0, {0}}});
  EXPECT_EQ(set.histories.size(), 2u);
  EXPECT_TRUE(span_reconstruction(f, set).ok);
  // One half table only reaches the other A column; both halves cover it.
  EXPECT_GT(full_reconstruction(f, set).residual, 0.5);
  const HistorySet both = collect_histories(f, {HalfTable{0, {0}}, HalfTable{0, {1}}});
  EXPECT_EQ(both.histories.size(), 4u);
  EXPECT_LT(full_reconstruction(f, both).residual, 1e-10);
}

TEST(Synthesis, GivensParameterisationIsUnitary) {
  EXPECT_EQ(givens_parameter_count(4), 16);
  std::vector<double> params(16);
  for (int i = 0; i < 16; ++i) params[i] = 0.37 * i - 1.1;
  EXPECT_LT(unitarity_defect(givens_unitary(4, params)), 1e-12);
  EXPECT_TRUE(givens_unitary(4, std::vector<double>(16, 0.0)).isApprox(CMatrix::Identity(4, 4), 1e-14));
}

TEST(Synthesis, SearchReachesTwoBits) {
  const ProblemFamily g = build_family("grover", 2);
  const SynthesisResult r = synthesize_UA(g, SynthesisObjective::ReadableInfo, 32, 1);
  EXPECT_GE(r.value, 2.0 - 1e-6);
  EXPECT_LE(r.value, 2.0 + 1e-9);
  EXPECT_LT(unitarity_defect(r.u_a), 1e-9);
  EXPECT_GE(r.restart, 0);
  EXPECT_LT(r.restart, 32);
}

TEST(Synthesis, SameSeedSameResult) {
  const ProblemFamily g = build_family("grover", 2);
  const SynthesisResult a = synthesize_UA(g, SynthesisObjective::ReadableInfo, 4, 9);
  const SynthesisResult b = synthesize_UA(g, SynthesisObjective::ReadableInfo, 4, 9);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.restart, b.restart);
  EXPECT_TRUE(a.u_a.isApprox(b.u_a, 0.0));
}

TEST(Synthesis, DeutschJozsaBeatsOrMatchesHadamard) {
  const ProblemFamily d = build_family("dj", 2);
  const Operator h = Operator::local(d.layout(), hadamard(2), Register::A, "H");
  const double baseline = readable_info_objective(d, apply(apply(prepare_initial(d), oracle_unitary(d)), h));
  EXPECT_GT(baseline, 0.5);
  EXPECT_GE(synthesize_UA(d, SynthesisObjective::ReadableInfo, 32, 2).value, baseline - 1e-6);
}

TEST(Synthesis, ConstantFamilyCarriesNoInformation) {
  const ProblemFamily f(FamilyKind::Custom, "flat", 1, 1, 1, {{BitString::parse("0"), {0, 0}}, {BitString::parse("1"), {0, 0}}},
                        {"p", "q"}, Goodness::Any, VInit::Minus);
  EXPECT_NEAR(synthesize_UA(f, SynthesisObjective::ReadableInfo, 4, 3).value, 0.0, 1e-9);
  EXPECT_NEAR(synthesize_UA(f, SynthesisObjective::Entanglement, 4, 3).value, 0.0, 1e-9);
}

TEST(Synthesis, ObjectivesShareAMaximizerForSearch) {
  const ObjectiveComparison c = compare_objectives(build_family("grover", 2), 32, 1);
  EXPECT_FALSE(c.maximizers_differ);
  EXPECT_NEAR(c.entanglement.value, 2.0, 1e-6);
  EXPECT_NEAR(c.entanglement_at_readable_best, 2.0, 1e-6);
  EXPECT_NEAR(c.readable_info.value, 2.0, 1e-6);
}

}  // namespace
}  // namespace halfinfo
