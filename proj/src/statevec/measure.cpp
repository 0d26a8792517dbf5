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
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

namespace {

// Branches whose squared norm falls below this after a projection are
// treated as annihilated.
constexpr double kDeadBranch = 1e-24;

template <typename Fn>
void for_each_amplitude(const PhaseTaggedState& state, Fn&& fn) {
  const RegisterLayout& layout = state.layout();
  const BasisIndex bd = layout.block_dim();
  const int shift = layout.nA() + layout.nV();
  for (const auto& [tag, branch] : state.branches()) {
    for (const auto& [b, block] : branch) {
      for (BasisIndex j = 0; j < bd; ++j) {
        const Complex amp = block[static_cast<Eigen::Index>(j)];
        if (amp != Complex{}) fn(tag, (b << shift) | j, amp);
      }
    }
  }
}

}  // namespace

PhaseTaggedState apply(const PhaseTaggedState& state, const Operator& op) {
  PhaseTaggedState::Branches out;
  for (const auto& [tag, branch] : state.branches()) {
    auto copy = branch;
    op.apply(state.layout(), copy);
    out.emplace(tag, std::move(copy));
  }
  return PhaseTaggedState::unchecked(state.layout(), std::move(out));
}

PhaseTaggedState apply_unitary(const PhaseTaggedState& state, const CMatrix& u, RegisterSet target) {
  return apply(state, Operator::local(state.layout(), u, target, "U"));
}

double outcome_probability(const PhaseTaggedState& state, const Projector& p) {
  double total = 0.0;
  for (const auto& [tag, branch] : state.branches()) {
    auto copy = branch;
    p.apply(state.layout(), copy);
    total += detail::branch_norm_squared(copy);
  }
  return total;
}

Projection project(const PhaseTaggedState& state, const Projector& p) {
  PhaseTaggedState::Branches out;
  double total = 0.0;
  for (const auto& [tag, branch] : state.branches()) {
    auto copy = branch;
    p.apply(state.layout(), copy);
    const double n2 = detail::branch_norm_squared(copy);
    total += n2;
    if (n2 > kDeadBranch) out.emplace(tag, std::move(copy));
  }
  if (total < kImpossibleProbability) {
    throw std::domain_error("impossible outcome: projection '" + p.description() + "' has probability " +
                            std::to_string(total));
  }
  double kept = 0.0;
  for (const auto& [tag, branch] : out) kept += detail::branch_norm_squared(branch);
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& [tag, branch] : out) {
    for (auto& [b, block] : branch) block *= scale;
  }
  return {PhaseTaggedState::unchecked(state.layout(), std::move(out)), total};
}

Measurement measure(const PhaseTaggedState& state, const BinaryObservable& obs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double p0 = outcome_probability(state, obs.zero);
  BasisIndex outcome = uniform(rng) < p0 ? 0 : 1;
  if (outcome == 0 && p0 < kImpossibleProbability) outcome = 1;
  if (outcome == 1 && 1.0 - p0 < kImpossibleProbability) outcome = 0;
  auto projected = project(state, outcome == 0 ? obs.zero : obs.one);
  return {outcome, projected.probability, std::move(projected.state)};
}

Measurement measure(const PhaseTaggedState& state, RegisterSet registers, std::uint64_t seed) {
  const auto dist = born_distribution(state, registers);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double u = uniform(rng);
  double cumulative = 0.0;
  BasisIndex outcome = dist.begin()->first;
  for (const auto& [idx, p] : dist) {
    if (p < kImpossibleProbability) continue;
    outcome = idx;
    cumulative += p;
    if (u < cumulative) break;
  }
  auto projected = project(state, Projector::onto_basis(registers, {outcome}, registers.str() + "=" + std::to_string(outcome)));
  return {outcome, projected.probability, std::move(projected.state)};
}

std::map<BasisIndex, double> born_distribution(const PhaseTaggedState& state, RegisterSet registers) {
  if (registers.empty()) throw std::invalid_argument("measurement needs at least one register");
  std::map<BasisIndex, double> dist;
  for_each_amplitude(state, [&](PhaseTag, BasisIndex full, Complex amp) {
    dist[state.layout().extract(registers, full)] += std::norm(amp);
  });
  return dist;
}

JointDistribution joint_distribution(const PhaseTaggedState& state, RegisterSet x, RegisterSet y) {
  if (x.empty() || y.empty()) throw std::invalid_argument("joint distribution needs two nonempty register sets");
  if (x.intersects(y)) throw std::invalid_argument("joint distribution needs disjoint register sets");
  JointDistribution joint;
  for_each_amplitude(state, [&](PhaseTag, BasisIndex full, Complex amp) {
    joint[{state.layout().extract(x, full), state.layout().extract(y, full)}] += std::norm(amp);
  });
  return joint;
}

double mutual_information(const JointDistribution& joint) {
  std::map<BasisIndex, double> px;
  std::map<BasisIndex, double> py;
  double total = 0.0;
  for (const auto& [xy, p] : joint) {
    px[xy.first] += p;
    py[xy.second] += p;
    total += p;
  }
  double mi = 0.0;
  for (const auto& [xy, p] : joint) {
    if (p <= 0.0) continue;
    mi += p / total * std::log2((p / total) / ((px[xy.first] / total) * (py[xy.second] / total)));
  }
  return std::max(mi, 0.0);
}

double mutual_information(const PhaseTaggedState& state, RegisterSet x, RegisterSet y) {
  return mutual_information(joint_distribution(state, x, y));
}

}  // namespace halfinfo
