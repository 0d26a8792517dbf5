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
#include <random>

#include <gtest/gtest.h>

#include "halfinfo/statevec.hpp"

namespace halfinfo {
namespace {

constexpr double kEps = 1e-12;

// |b>_B |a>_A with the given amplitude per (tag, b, a), V empty.
PhaseTaggedState basis_mixture(const RegisterLayout& layout, const std::vector<std::pair<BasisIndex, BasisIndex>>& ba) {
  PhaseTaggedState::Branches branches;
  const double amp = 1.0 / std::sqrt(static_cast<double>(ba.size()));
  PhaseTag tag = 0;
  for (const auto& [b, a] : ba) {
    CVector block = CVector::Zero(static_cast<Eigen::Index>(layout.block_dim()));
    block[static_cast<Eigen::Index>(a << layout.nV())] = amp;
    branches[tag++][b] = block;
  }
  return PhaseTaggedState(layout, branches);
}

PhaseTaggedState random_state(const RegisterLayout& layout, int tags, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::map<PhaseTag, CVector> dense;
  double norm = 0.0;
  for (int t = 0; t < tags; ++t) {
    CVector v(static_cast<Eigen::Index>(layout.dim()));
    for (auto& z : v) z = Complex(g(rng), g(rng));
    norm += v.squaredNorm();
    dense[t] = v;
  }
  for (auto& [t, v] : dense) v /= std::sqrt(norm);
  return PhaseTaggedState::from_dense(layout, dense);
}

TEST(Layout, ComposeAndSplitAgree) {
  const RegisterLayout layout(2, 3, 1);
  for (BasisIndex b = 0; b < 4; ++b) {
    for (BasisIndex a = 0; a < 8; ++a) {
      for (BasisIndex v = 0; v < 2; ++v) {
        const BasisIndex full = layout.compose(b, a, v);
        EXPECT_EQ(layout.b_of(full), b);
        EXPECT_EQ(layout.a_of(full), a);
        EXPECT_EQ(layout.v_of(full), v);
        const BasisIndex ba = layout.extract(Register::B | Register::A, full);
        EXPECT_EQ(ba, (b << 3) | a);
        EXPECT_EQ(layout.join(Register::B | Register::A, ba, v), full);
      }
    }
  }
}

TEST(Layout, RejectsOversizedSpaces) {
  EXPECT_THROW(RegisterLayout(20, 4, 1), std::invalid_argument);
  EXPECT_THROW(RegisterLayout(0, 2, 1), std::invalid_argument);
  EXPECT_NO_THROW(RegisterLayout(12, 11, 1));
}

TEST(State, RejectsUnnormalizedInput) {
  const RegisterLayout layout(1, 1, 0);
  PhaseTaggedState::Branches branches;
  branches[0][0] = CVector::Ones(2);
  EXPECT_THROW(PhaseTaggedState(layout, branches), std::invalid_argument);
  branches[0][0] = CVector::Ones(3) / std::sqrt(3.0);
  EXPECT_THROW(PhaseTaggedState(layout, branches), std::invalid_argument);
}

TEST(State, BranchesOnDistinctTagsDoNotInterfere) {
  // Two tags on the same basis state: the density is still a pure projector.
  const RegisterLayout layout(1, 1, 0);
  const auto s = basis_mixture(layout, {{0, 0}, {0, 0}});
  const DensityMatrix rho = density_of(s);
  EXPECT_NEAR(rho.at(0, 0).real(), 1.0, kEps);
  EXPECT_NEAR(von_neumann_entropy(rho), 0.0, 1e-9);
}

TEST(Density, FourTagsGiveTwoBitsOnB) {
  const RegisterLayout layout(2, 2, 0);
  const auto s = basis_mixture(layout, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  EXPECT_NEAR(b_entropy(s), 2.0, 1e-9);
  const DensityMatrix ba = reduced_density(s, Register::B | Register::A);
  ba.validate();
  for (BasisIndex x = 0; x < 4; ++x) EXPECT_NEAR(ba.at(x * 5, x * 5).real(), 0.25, kEps);
  EXPECT_NEAR(ba.at(0, 5).real(), 0.0, kEps);
}

TEST(Density, ReducedDensityOfRandomStatesIsValid) {
  std::mt19937_64 rng(7);
  const RegisterLayout layout(2, 2, 1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_state(layout, 1 + trial % 3, rng);
    for (RegisterSet keep : {RegisterSet(Register::B), RegisterSet(Register::A), Register::B | Register::V,
                             RegisterSet::all()}) {
      const DensityMatrix rho = reduced_density(s, keep);
      EXPECT_NO_THROW(rho.validate());
      const double h = von_neumann_entropy(rho);
      EXPECT_GE(h, -1e-9);
      EXPECT_LE(h, layout.qubits(keep) + 1e-9);
    }
  }
}

TEST(Density, DistanceVanishesOnlyForEqualDensities) {
  const RegisterLayout layout(1, 1, 0);
  const auto mixed = basis_mixture(layout, {{0, 0}, {1, 1}});
  PhaseTaggedState::Branches coherent;
  CVector block = CVector::Zero(2);
  block[0] = 1.0 / std::sqrt(2.0);
  coherent[0][0] = block;
  block.setZero();
  block[1] = 1.0 / std::sqrt(2.0);
  coherent[0][1] = block;
  const PhaseTaggedState pure(layout, coherent);
  EXPECT_NEAR(density_distance(mixed, mixed), 0.0, kEps);
  // Off-diagonal terms of 1/2 at (0,3) and (3,0).
  EXPECT_NEAR(density_distance(mixed, pure), std::sqrt(0.5), 1e-12);
}

TEST(Operator, AdjointUndoesSequence) {
  std::mt19937_64 rng(3);
  const RegisterLayout layout(2, 2, 1);
  const auto s = random_state(layout, 2, rng);
  const Operator op = Operator::local(layout, hadamard(2), Register::A, "H")
                          .then(Operator::permutation([](BasisIndex x) { return x ^ 1u; },
                                                      [](BasisIndex x) { return x ^ 1u; }, "X_V"))
                          .then(Operator::reflection(layout, CVector::Ones(4), Register::A, "R"));
  const auto back = apply(apply(s, op), op.adjoint());
  EXPECT_NEAR(density_distance(back, s), 0.0, 1e-12);
  EXPECT_LT(unitarity_defect(op.matrix(layout)), 1e-12);
}

TEST(Operator, RejectsNonUnitaryMatrix) {
  const RegisterLayout layout(1, 1, 0);
  EXPECT_THROW(Operator::local(layout, CMatrix::Ones(2, 2), Register::A, "bad"), std::invalid_argument);
  EXPECT_THROW(Operator::local(layout, CMatrix::Identity(4, 4), Register::A, "bad"), std::invalid_argument);
}

TEST(Operator, HadamardIsUnitaryWithUniformFirstColumn) {
  const CMatrix h = hadamard(3);
  EXPECT_LT(unitarity_defect(h), 1e-12);
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_NEAR(h(i, 0).real(), 1.0 / std::sqrt(8.0), kEps);
}

TEST(Projector, ImpossibleOutcomeThrows) {
  const RegisterLayout layout(1, 1, 0);
  const auto s = basis_mixture(layout, {{0, 0}});
  EXPECT_THROW(project(s, Projector::onto_basis(Register::A, {1}, "a=1")), std::domain_error);
  const Projection p = project(s, Projector::onto_basis(Register::A, {0}, "a=0"));
  EXPECT_NEAR(p.probability, 1.0, kEps);
}

TEST(Projector, ComplementSumsToOne) {
  std::mt19937_64 rng(11);
  const RegisterLayout layout(2, 2, 1);
  const auto s = random_state(layout, 3, rng);
  const BinaryObservable parity = parity_observable(layout, Register::A, "A+");
  EXPECT_NEAR(outcome_probability(s, parity.zero) + outcome_probability(s, parity.one), 1.0, 1e-12);
  const CMatrix p = parity.zero.matrix(layout);
  EXPECT_LT((p * p - p).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Projector, ParityKeepsEqualBits) {
  const RegisterLayout layout(1, 2, 0);
  const BinaryObservable parity = parity_observable(layout, Register::A, "A+");
  for (BasisIndex a = 0; a < 4; ++a) {
    const auto s = basis_mixture(layout, {{0, a}});
    const bool even = a == 0 || a == 3;
    EXPECT_NEAR(outcome_probability(s, parity.zero), even ? 1.0 : 0.0, kEps) << a;
  }
}

TEST(Projector, BackEvolutionPreservesOutcomeProbability) {
  std::mt19937_64 rng(5);
  const RegisterLayout layout(2, 2, 1);
  const auto s = random_state(layout, 2, rng);
  const Operator u = Operator::local(layout, hadamard(2), Register::A, "H")
                         .then(Operator::permutation([](BasisIndex x) { return x ^ 3u; },
                                                     [](BasisIndex x) { return x ^ 3u; }, "flip"));
  const Projector p = qubit_observable(layout, Register::A, 0, "A0").zero;
  EXPECT_NEAR(outcome_probability(apply(s, u), p), outcome_probability(s, back_evolve_projector(p, u)), 1e-12);
}

TEST(Measure, SameSeedSameOutcome) {
  std::mt19937_64 rng(9);
  const RegisterLayout layout(2, 2, 0);
  const auto s = random_state(layout, 2, rng);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Measurement m1 = measure(s, Register::A, seed);
    const Measurement m2 = measure(s, Register::A, seed);
    EXPECT_EQ(m1.outcome, m2.outcome);
    EXPECT_NEAR(density_distance(m1.state, m2.state), 0.0, kEps);
    EXPECT_NEAR(reduced_density(m1.state, Register::A).at(m1.outcome, m1.outcome).real(), 1.0, 1e-12);
  }
}

TEST(Measure, BornDistributionSumsToOne) {
  std::mt19937_64 rng(13);
  const auto s = random_state(RegisterLayout(2, 2, 1), 3, rng);
  double total = 0.0;
  for (const auto& [x, p] : born_distribution(s, Register::B | Register::A)) total += p;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Information, PerfectCorrelationGivesEntropyOfMarginal) {
  const RegisterLayout layout(2, 2, 0);
  const auto s = basis_mixture(layout, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  EXPECT_NEAR(mutual_information(s, Register::B, Register::A), 2.0, 1e-12);
  const auto product = basis_mixture(layout, {{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  EXPECT_NEAR(mutual_information(product, Register::B, Register::A), 0.0, 1e-12);
}

TEST(Information, SchmidtRankSeparatesProductFromEntangled) {
  const RegisterLayout layout(1, 1, 0);
  PhaseTaggedState::Branches entangled;
  CVector block = CVector::Zero(2);
  block[0] = 1.0 / std::sqrt(2.0);
  entangled[0][0] = block;
  block.setZero();
  block[1] = 1.0 / std::sqrt(2.0);
  entangled[0][1] = block;
  EXPECT_EQ(schmidt_rank(PhaseTaggedState(layout, entangled), 0, Register::B), 2);
  EXPECT_EQ(schmidt_rank(basis_mixture(layout, {{1, 0}}), 0, Register::B), 1);
}

}  // namespace
}  // namespace halfinfo
