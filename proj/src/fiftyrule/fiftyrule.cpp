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

#include "halfinfo/fiftyrule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace halfinfo {

namespace {

bool consistent(const ProblemFamily& family, std::size_t t, const std::vector<std::pair<std::uint64_t, std::uint64_t>>& log) {
  return std::all_of(log.begin(), log.end(), [&](const auto& q) { return family.value(t, q.first) == q.second; });
}

// All k-subsets of {0, ..., m-1} in lexicographic order.
void for_each_subset(std::uint64_t m, std::size_t k, const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    fn(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::string describe(const ProblemFamily& family, const HalfTable& half) {
  std::string out = "{";
  for (std::size_t i = 0; i < half.rows.size(); ++i) {
    if (i) out += ",";
    out += to_bits(half.rows[i], family.n()) + ":" + to_bits(family.value(half.table, half.rows[i]), family.value_bits());
  }
  return out + "}";
}

bool is_good(const ProblemFamily& family, const HalfTable& half) {
  if (half.rows.size() * 2 != family.arguments()) return false;
  std::vector<std::uint64_t> values;
  for (const auto a : half.rows) values.push_back(family.value(half.table, a));
  switch (family.goodness()) {
    case Goodness::NoMarkedRow:
      return std::none_of(values.begin(), values.end(), [](auto v) { return v == 1; });
    case Goodness::UniformValues:
      return std::all_of(values.begin(), values.end(), [&](auto v) { return v == values.front(); });
    case Goodness::DistinctValues:
      return std::set<std::uint64_t>(values.begin(), values.end()).size() == values.size();
    case Goodness::Any:
      return true;
  }
  return false;
}

std::vector<HalfTable> enumerate_good_half_tables(const ProblemFamily& family, std::size_t table) {
  if (table >= family.size()) throw std::out_of_range("table index out of range");
  std::vector<HalfTable> out;
  for_each_subset(family.arguments(), family.arguments() / 2, [&](const std::vector<std::uint64_t>& rows) {
    HalfTable half{table, rows};
    if (is_good(family, half)) out.push_back(std::move(half));
  });
  return out;
}

KnowledgeState::KnowledgeState(const ProblemFamily& family, std::vector<std::size_t> candidates,
                               std::vector<std::pair<std::uint64_t, std::uint64_t>> log)
    : family_(family), candidates_(std::move(candidates)), log_(std::move(log)) {
  if (candidates_.empty()) throw std::invalid_argument("no table is consistent with the observations");
}

KnowledgeState KnowledgeState::full(const ProblemFamily& family) {
  std::vector<std::size_t> all(family.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return {family, std::move(all), {}};
}

KnowledgeState KnowledgeState::from_half_table(const ProblemFamily& family, const HalfTable& half) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> log;
  for (const auto a : half.rows) log.emplace_back(a, family.value(half.table, a));
  std::vector<std::size_t> candidates;
  for (std::size_t t = 0; t < family.size(); ++t) {
    if (consistent(family, t, log)) candidates.push_back(t);
  }
  return {family, std::move(candidates), std::move(log)};
}

KnowledgeState KnowledgeState::observe(std::uint64_t a, std::uint64_t value) const {
  if (a >= family_.arguments()) throw std::invalid_argument("argument out of range");
  std::vector<std::size_t> kept;
  for (const auto t : candidates_) {
    if (family_.value(t, a) == value) kept.push_back(t);
  }
  auto log = log_;
  log.emplace_back(a, value);
  return {family_, std::move(kept), std::move(log)};
}

struct MinimaxSolver::Impl {
  std::map<std::vector<std::uint64_t>, int> memo;
};

MinimaxSolver::MinimaxSolver(ProblemFamily family) : family_(std::move(family)), impl_(std::make_shared<Impl>()) {}

std::size_t MinimaxSolver::memo_size() const { return impl_->memo.size(); }

int MinimaxSolver::solve(const std::vector<std::size_t>& candidates) {
  if (candidates.empty()) throw std::invalid_argument("minimax: empty candidate set");
  const auto& first = family_.solution(candidates.front());
  if (std::all_of(candidates.begin(), candidates.end(), [&](auto t) { return family_.solution(t) == first; })) {
    return 0;
  }
  std::vector<std::uint64_t> key((family_.size() + 63) / 64, 0);
  for (const auto t : candidates) key[t / 64] |= std::uint64_t{1} << (t % 64);
  if (const auto it = impl_->memo.find(key); it != impl_->memo.end()) return it->second;

  int best = std::numeric_limits<int>::max();
  for (std::uint64_t a = 0; a < family_.arguments(); ++a) {
    std::map<std::uint64_t, std::vector<std::size_t>> groups;
    for (const auto t : candidates) groups[family_.value(t, a)].push_back(t);
    if (groups.size() < 2) continue;  // the answer is known in advance
    int worst = 0;
    for (const auto& [value, group] : groups) {
      worst = std::max(worst, 1 + solve(group));
      if (worst >= best) break;
    }
    best = std::min(best, worst);
    if (best == 1) break;
  }
  if (best == std::numeric_limits<int>::max()) {
    throw std::domain_error("minimax: tables with different solutions agree on every argument");
  }
  impl_->memo.emplace(std::move(key), best);
  return best;
}

int classical_query_complexity(const ProblemFamily& family, const KnowledgeState& knowledge) {
  return MinimaxSolver(family).solve(knowledge.candidates());
}

Schedule single_query_schedule(const ProblemFamily& family) {
  std::map<BasisIndex, std::set<std::string>> labels;
  const auto outcomes = single_query_outcomes(family);
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    for (const auto& [a, p] : outcomes[t]) labels[a].insert(family.solution(t));
  }
  std::map<BasisIndex, std::string> decode;
  for (const auto& [a, set] : labels) decode[a] = set.size() == 1 ? *set.begin() : std::string("undetermined");
  return {Operator::local(family.layout(), hadamard(family.n()), Register::A, "H_A"), 1,
          [decode](BasisIndex a) {
            const auto it = decode.find(a);
            return it == decode.end() ? std::string("undetermined") : it->second;
          }};
}

QueryReport verify_fifty_rule(const ProblemFamily& family) {
  if (family.kind() == FamilyKind::Grover && family.n() > 4) {
    throw std::invalid_argument("minimax query counts are computed for grover n <= 4 only");
  }
  QueryReport report;
  report.family = family.label();
  report.degenerate = family.size() == 1;

  const bool generic = family.kind() == FamilyKind::Permutation || family.kind() == FamilyKind::Custom;
  const Schedule schedule = generic ? single_query_schedule(family) : default_schedule(family);
  bool exact = true;
  for (std::size_t t = 0; t < family.size(); ++t) {
    RunOptions options;
    options.bob_choice = family.table(t).index;
    options.seed = t;
    const AlgorithmTrace trace = run_algorithm(family, schedule, options);
    report.quantum = std::max(report.quantum, trace.evaluations);
    if (family.kind() == FamilyKind::Simon) {
      const auto h = *simon_period(family.table(t), family.n());
      for (const auto& [a, p] : born_distribution(trace.at(Stage::AfterUA), Register::A)) {
        if (p > kImpossibleProbability && dot_mod2(a, h) != 0) exact = false;
      }
    } else if (std::abs(trace.success_probability - 1.0) > 1e-10) {
      exact = false;
    }
  }
  report.quantum_exact = exact;

  MinimaxSolver solver(family);
  report.classical = solver.solve(KnowledgeState::full(family).candidates());
  for (std::size_t t = 0; t < family.size(); ++t) {
    for (auto& half : enumerate_good_half_tables(family, t)) {
      const int count = solver.solve(KnowledgeState::from_half_table(family, half).candidates());
      report.classical_with_info = std::max(report.classical_with_info, count);
      report.breakdown.push_back({t, std::move(half), count});
    }
  }
  report.rule_holds = report.quantum_exact && !report.degenerate && report.quantum == report.classical_with_info;
  return report;
}

std::vector<HalfProjection> halved_projection_set(const RegisterLayout& layout) {
  if (layout.nB() != 2 || layout.nA() != 2) throw std::invalid_argument("halved projections need nB = nA = 2");
  std::vector<HalfProjection> out;
  for (BasisIndex x = 0; x < 4; ++x) {
    for (BasisIndex y = x + 1; y < 4; ++y) {
      const std::string name = "b=a in {" + to_bits(x, 2) + "," + to_bits(y, 2) + "}";
      out.push_back({{x, y}, Projector::onto_basis(Register::B | Register::A, {(x << 2) | x, (y << 2) | y}, name)});
    }
  }
  return out;
}

Projector half_table_projector(const ProblemFamily& family, const HalfTable& half) {
  std::vector<BasisIndex> keep;
  const KnowledgeState knowledge = KnowledgeState::from_half_table(family, half);
  for (const auto t : knowledge.candidates()) {
    keep.push_back(family.table(t).index.bits);
  }
  std::sort(keep.begin(), keep.end());
  return Projector::onto_basis(Register::B, std::move(keep), "tables agreeing with " + describe(family, half));
}

KnowledgeGain back_evolved_knowledge(const ProblemFamily& family, const Projector& p, const Operator& u_algorithm) {
  const PhaseTaggedState initial = prepare_initial(family);
  Projection projected = project(initial, back_evolve_projector(p, u_algorithm));
  const double after = b_entropy(projected.state);
  return {std::move(projected.state), projected.probability, b_entropy(initial), after};
}

bool check_dual_projection_no_info(const ProblemFamily& family, const BitString& x, const BitString& y) {
  if (family.kind() != FamilyKind::DeutschJozsa) throw std::invalid_argument("dual projection check needs a dj family");
  if (y != x.complement()) throw std::invalid_argument(x.str() + " and " + y.str() + " are not dual values");
  const std::size_t tx = family.index_of(x);
  family.index_of(y);
  const RegisterLayout& layout = family.layout();
  const int nA = layout.nA();

  const auto outcomes = single_query_outcomes(family);
  if (outcomes[tx].size() != 1) throw std::logic_error("dj table not correlated with a single A state");
  const BasisIndex ax = outcomes[tx].begin()->first;

  const Operator flow = oracle_unitary(family).then(Operator::local(layout, hadamard(nA), Register::A, "H_A"));
  const PhaseTaggedState after = apply(prepare_initial(family), flow);
  const auto alice_obs = qubit_observable(layout, Register::A, nA - 1, "A_last");
  const auto& alice_p = (ax & 1u) ? alice_obs.one : alice_obs.zero;
  const PhaseTaggedState alice = project(after, alice_p).state;
  const double before = von_neumann_entropy(reduced_density(alice, Register::A));

  const auto bob_obs = qubit_observable(layout, Register::B, 0, "B_0");
  const PhaseTaggedState bob = project(alice, bob_obs.zero).state;
  // Bob's reading keeps exactly one of the two dual tables.
  const auto kept = born_distribution(bob, Register::B);
  if (kept.count(x.bits) == kept.count(y.bits)) throw std::logic_error("B_0 does not separate the dual pair");
  const double after_bob = von_neumann_entropy(reduced_density(bob, Register::A));
  return std::abs(after_bob - before) <= 1e-10;
}

double both_parties_contribute(const ProblemFamily& family) {
  const RegisterLayout& layout = family.layout();
  const Operator flow =
      oracle_unitary(family).then(Operator::local(layout, hadamard(family.n()), Register::A, "H_A"));
  return mutual_information(apply(prepare_initial(family), flow), Register::B, Register::A);
}

}  // namespace halfinfo
