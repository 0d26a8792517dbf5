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

#include "halfinfo/runner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace halfinfo {

namespace {

// Alice's relativized view is only recorded when the mixed state stays
// small; grover(11) would otherwise evolve 2^23 amplitudes per iteration.
constexpr BasisIndex kRelativeViewBudget = BasisIndex{1} << 20;

Operator b_transposition(const RegisterLayout& layout, BasisIndex x, BasisIndex y) {
  if (x == y) return {};
  auto swap = [layout, x, y](BasisIndex full) {
    const BasisIndex b = layout.b_of(full);
    if (b != x && b != y) return full;
    return layout.compose(b == x ? y : x, layout.a_of(full), layout.v_of(full));
  };
  return Operator::permutation(swap, swap, "U_B");
}

BasisIndex sharp_b(const PhaseTaggedState& state) {
  const auto& branch = state.branches().begin()->second;
  return branch.begin()->first;
}

void evolve(const Schedule& schedule, const Operator& oracle,
            std::vector<TraceStage>& stages, PhaseTaggedState& state) {
  for (int k = 1; k <= schedule.iterations; ++k) {
    const std::string note = schedule.iterations > 1 ? "iteration " + std::to_string(k) : "";
    state = apply(state, oracle);
    stages.push_back({Stage::AfterOracle, note, state});
    state = apply(state, schedule.u_a);
    stages.push_back({Stage::AfterUA, note, state});
  }
}

double decode_probability(const PhaseTaggedState& state, const Schedule& schedule, const std::string& label) {
  double p = 0.0;
  for (const auto& [a, prob] : born_distribution(state, Register::A)) {
    if (schedule.decode(a) == label) p += prob;
  }
  return p;
}

const PhaseTaggedState& find_stage(const std::vector<TraceStage>& stages, Stage stage) {
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    if (it->stage == stage) return it->state;
  }
  throw std::out_of_range("trace has no stage '" + std::string(stage_label(stage)) + "'");
}

BasisIndex checked_b(const ProblemFamily& family, const BitString& b, std::string_view what) {
  if (b.width != family.layout().nB() || !family.find(b.bits)) {
    throw std::invalid_argument(std::string(what) + " " + b.str() + " is not a table of " + family.label());
  }
  return b.bits;
}

}  // namespace

std::string_view stage_label(Stage stage) {
  switch (stage) {
    case Stage::Initial:
      return "initial";
    case Stage::AfterUB:
      return "after-U_B";
    case Stage::AfterOracle:
      return "after-oracle";
    case Stage::AfterUA:
      return "after-U_A";
    case Stage::AfterBobMeasure:
      return "after-Bob-measure";
    case Stage::AfterAliceMeasure:
      return "after-Alice-measure";
  }
  return "unknown";
}

std::string_view order_name(MeasurementOrder order) {
  return order == MeasurementOrder::BobFirst ? "bob_first" : "bob_last";
}

const PhaseTaggedState& AlgorithmTrace::at(Stage stage) const { return find_stage(stages, stage); }
const PhaseTaggedState& AlgorithmTrace::relative_at(Stage stage) const { return find_stage(relative, stage); }

int default_grover_iterations(int n) {
  if (n <= 2) return 1;
  return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::pow(2.0, n / 2.0)));
}

Operator grover_diffusion(const RegisterLayout& layout) {
  const CVector uniform = CVector::Ones(static_cast<Eigen::Index>(layout.dim(Register::A)));
  return Operator::reflection(layout, uniform, Register::A, "diffusion");
}

Schedule default_schedule(const ProblemFamily& family) {
  const int n = family.n();
  switch (family.kind()) {
    case FamilyKind::Grover:
      return {grover_diffusion(family.layout()), default_grover_iterations(n),
              [n](BasisIndex a) { return to_bits(a, n); }};
    case FamilyKind::DeutschJozsa:
      return {Operator::local(family.layout(), hadamard(n), Register::A, "H_A"), 1,
              [](BasisIndex a) { return std::string(a == 0 ? "constant" : "balanced"); }};
    case FamilyKind::Permutation:
      return {Operator::local(family.layout(), hadamard(n), Register::A, "H_A"), 1,
              [](BasisIndex a) { return a == 0 ? std::string("none") : std::to_string(a); }};
    default:
      return {Operator::local(family.layout(), hadamard(n), Register::A, "H_A"), 1,
              [n](BasisIndex a) { return to_bits(a, n); }};
  }
}

Operator algorithm_unitary(const ProblemFamily& family, const Schedule& schedule) {
  const Operator oracle = oracle_unitary(family);
  Operator u;
  for (int k = 0; k < schedule.iterations; ++k) u = u.then(oracle).then(schedule.u_a);
  return u;
}

AlgorithmTrace run_algorithm(const ProblemFamily& family, const Schedule& schedule, const RunOptions& options) {
  if (schedule.iterations < 1) throw std::invalid_argument("schedule needs at least one iteration");
  if (!schedule.decode) throw std::invalid_argument("schedule has no decoder");
  const RegisterLayout& layout = family.layout();
  std::optional<BasisIndex> choice;
  if (options.bob_choice) {
    if (options.order == MeasurementOrder::BobLast) {
      throw std::invalid_argument("bob_choice needs the bob_first order; use u_b_swap for a fixed U_B");
    }
    if (options.u_b_swap) throw std::invalid_argument("bob_choice and u_b_swap are exclusive");
    choice = checked_b(family, *options.bob_choice, "bob_choice");
  }
  Operator fixed_ub;
  if (options.u_b_swap) {
    fixed_ub = b_transposition(layout, checked_b(family, options.u_b_swap->first, "U_B swap"),
                               checked_b(family, options.u_b_swap->second, "U_B swap"));
  }

  std::mt19937_64 rng(options.seed);
  const Operator oracle = oracle_unitary(family);
  const PhaseTaggedState initial = prepare_initial(family);
  const bool with_relative = initial.stored_amplitudes() <= kRelativeViewBudget;

  AlgorithmTrace trace;
  trace.family = family.label();
  trace.order = options.order;
  trace.evaluations = schedule.iterations;
  trace.stages.push_back({Stage::Initial, "", initial});

  if (options.order == MeasurementOrder::BobFirst) {
    const Measurement bob = measure(initial, Register::B, rng());
    trace.bob_selection = bob.outcome;
    trace.stages.push_back({Stage::AfterBobMeasure, "", bob.state});
    const Operator ub = choice ? b_transposition(layout, bob.outcome, *choice) : fixed_ub;
    PhaseTaggedState state = apply(bob.state, ub);
    trace.bob_outcome = sharp_b(state);
    trace.stages.push_back({Stage::AfterUB, "", state});
    evolve(schedule, oracle, trace.stages, state);
    trace.solution = family.solution(*family.find(trace.bob_outcome));
    trace.success_probability = decode_probability(state, schedule, trace.solution);
    const Measurement alice = measure(state, Register::A, rng());
    trace.alice_outcome = alice.outcome;
    trace.stages.push_back({Stage::AfterAliceMeasure, "", alice.state});

    if (with_relative) {
      trace.relative.push_back({Stage::Initial, "", initial});
      PhaseTaggedState rel = apply(initial, ub);
      trace.relative.push_back({Stage::AfterUB, "", rel});
      evolve(schedule, oracle, trace.relative, rel);
      rel = project(rel, Projector::onto_basis(Register::A, {alice.outcome}, "A reading")).state;
      trace.relative.push_back({Stage::AfterAliceMeasure, "", rel});
      rel = project(rel, Projector::onto_basis(Register::B, {trace.bob_outcome}, "B reading")).state;
      trace.relative.push_back({Stage::AfterBobMeasure, "", rel});
    }
  } else {
    PhaseTaggedState state = apply(initial, fixed_ub);
    trace.stages.push_back({Stage::AfterUB, "", state});
    evolve(schedule, oracle, trace.stages, state);
    const PhaseTaggedState before = state;
    const Measurement alice = measure(state, Register::A, rng());
    trace.alice_outcome = alice.outcome;
    trace.stages.push_back({Stage::AfterAliceMeasure, "", alice.state});
    const Measurement bob = measure(alice.state, Register::B, rng());
    trace.bob_outcome = bob.outcome;
    trace.stages.push_back({Stage::AfterBobMeasure, "", bob.state});
    trace.bob_selection = sharp_b(apply(bob.state, fixed_ub.adjoint()));
    trace.solution = family.solution(*family.find(trace.bob_outcome));
    // Averaged over Bob's table: Alice is not conditioned on a reading of B.
    double p = 0.0;
    for (const auto& [ba, prob] : joint_distribution(before, Register::B, Register::A)) {
      if (schedule.decode(ba.second) == family.solution(*family.find(ba.first))) p += prob;
    }
    trace.success_probability = p;
    if (with_relative) trace.relative = trace.stages;
  }
  trace.answer = schedule.decode(trace.alice_outcome);
  trace.success = trace.answer == trace.solution;
  return trace;
}

AlgorithmTrace run_grover(int n, const RunOptions& options, std::optional<int> iterations) {
  if (n < 2 || n > 11) throw std::invalid_argument("run_grover: n must be in [2, 11]");
  const ProblemFamily family = build_family(FamilyKind::Grover, n);
  Schedule schedule = default_schedule(family);
  if (iterations) schedule.iterations = *iterations;
  return run_algorithm(family, schedule, options);
}

AlgorithmTrace run_dj(int n, const RunOptions& options) {
  const ProblemFamily family = build_family(FamilyKind::DeutschJozsa, n);
  return run_algorithm(family, default_schedule(family), options);
}

PermRun run_perm(const RunOptions& options) {
  const ProblemFamily family = build_family(FamilyKind::Permutation, 2);
  PermRun run{0, run_algorithm(family, default_schedule(family), options)};
  if (run.trace.alice_outcome == 0) throw std::logic_error("perm: A read 00");
  run.partition = static_cast<int>(run.trace.alice_outcome);
  return run;
}

std::vector<double> grover_success_curve(int n, int k_max, BasisIndex b) {
  if (k_max < 1) throw std::invalid_argument("grover_success_curve: k_max must be positive");
  const ProblemFamily family = build_family(FamilyKind::Grover, n);
  const Operator oracle = oracle_unitary(family);
  const Operator diffusion = grover_diffusion(family.layout());
  PhaseTaggedState state = prepare_sharp(family, family.index_of({b, n}), VInit::Minus);
  std::vector<double> curve;
  for (int k = 1; k <= k_max; ++k) {
    state = apply(apply(state, oracle), diffusion);
    const auto dist = born_distribution(state, Register::A);
    const auto it = dist.find(b);
    curve.push_back(it == dist.end() ? 0.0 : it->second);
  }
  return curve;
}

SimonRun run_simon(int n, const RunOptions& options, int max_iterations) {
  return run_simon(build_family(FamilyKind::Simon, n), options, max_iterations);
}

SimonRun run_simon(const ProblemFamily& family, const RunOptions& options, int max_iterations) {
  if (family.kind() != FamilyKind::Simon) throw std::invalid_argument("run_simon needs a simon family");
  if (options.order != MeasurementOrder::BobFirst) throw std::invalid_argument("run_simon runs bob_first only");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  const int n = family.n();
  Schedule schedule = default_schedule(family);

  SimonRun run;
  run.traces.push_back(run_algorithm(family, schedule, options));
  const BasisIndex b = run.traces.front().bob_outcome;
  run.table = *family.find(b);

  // Later rounds keep B sharp and rerun the single-call circuit on fresh A
  // and V registers.
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  const Operator oracle = oracle_unitary(family);
  auto record = [&](const AlgorithmTrace& t) {
    run.strings.push_back({t.alice_outcome, n});
    ++run.evaluations;
  };
  record(run.traces.front());
  while (gf2_rank(run.strings) < n - 1) {
    if (run.evaluations >= max_iterations) {
      throw std::runtime_error("simon: no " + std::to_string(n - 1) + " independent strings after " +
                               std::to_string(max_iterations) + " iterations");
    }
    AlgorithmTrace t;
    t.family = family.label();
    t.evaluations = 1;
    t.bob_selection = t.bob_outcome = b;
    t.solution = family.solution(run.table);
    PhaseTaggedState state = prepare_sharp(family, run.table, family.v_init());
    t.stages.push_back({Stage::Initial, "round " + std::to_string(run.evaluations + 1), state});
    evolve(schedule, oracle, t.stages, state);
    const Measurement alice = measure(state, Register::A, rng());
    t.alice_outcome = alice.outcome;
    t.stages.push_back({Stage::AfterAliceMeasure, "", alice.state});
    t.answer = schedule.decode(t.alice_outcome);
    record(t);
    run.traces.push_back(std::move(t));
  }
  const auto basis = gf2_solve(run.strings);
  if (basis.size() == 1) run.h = basis.front();
  return run;
}

DeferredReport deferred_equivalence(const ProblemFamily& family, const Schedule& schedule, int trials,
                                    std::uint64_t seed, std::optional<std::pair<BitString, BitString>> u_b_swap) {
  if (trials < 1) throw std::invalid_argument("deferred_equivalence: trials must be positive");
  const RegisterLayout& layout = family.layout();
  Operator ub;
  if (u_b_swap) {
    ub = b_transposition(layout, checked_b(family, u_b_swap->first, "U_B swap"),
                         checked_b(family, u_b_swap->second, "U_B swap"));
  }
  const Operator flow = algorithm_unitary(family, schedule);

  DeferredReport report;
  report.trials = trials;
  // Bob first: he reads each table with its weight, then U_B and the
  // algorithm act on the sharp state.
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double pb = family.weights()[i] * family.weights()[i];
    const BasisIndex selected = family.table(i).index.bits;
    const auto state = apply(apply(prepare_sharp(family, i, family.v_init()), ub), flow);
    for (const auto& [a, pa] : born_distribution(state, Register::A)) report.bob_first[{selected, a}] += pb * pa;
  }
  // Bob last: B is read at the end; his selection is the reading pulled
  // back through U_B.
  const auto final_state = apply(apply(prepare_initial(family), ub), flow);
  auto pull_back = [&](BasisIndex b) {
    if (!u_b_swap) return b;
    if (b == u_b_swap->first.bits) return u_b_swap->second.bits;
    if (b == u_b_swap->second.bits) return u_b_swap->first.bits;
    return b;
  };
  for (const auto& [ba, p] : joint_distribution(final_state, Register::B, Register::A)) {
    report.bob_last[{pull_back(ba.first), ba.second}] += p;
  }
  auto get = [](const JointDistribution& d, const std::pair<BasisIndex, BasisIndex>& k) {
    const auto it = d.find(k);
    return it == d.end() ? 0.0 : it->second;
  };
  for (const auto& [k, p] : report.bob_first) {
    report.max_difference = std::max(report.max_difference, std::abs(p - get(report.bob_last, k)));
  }
  for (const auto& [k, p] : report.bob_last) {
    report.max_difference = std::max(report.max_difference, std::abs(p - get(report.bob_first, k)));
  }
  report.equal = report.max_difference <= 1e-12;

  RunOptions options;
  options.order = MeasurementOrder::BobLast;
  options.u_b_swap = u_b_swap;
  for (int t = 0; t < trials; ++t) {
    options.seed = seed + static_cast<std::uint64_t>(t);
    const auto run = run_algorithm(family, schedule, options);
    if (get(report.bob_first, {run.bob_selection, run.alice_outcome}) > kImpossibleProbability) {
      ++report.trials_in_support;
    }
  }
  return report;
}

}  // namespace halfinfo
