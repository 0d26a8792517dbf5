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

// End-to-end runs of the oracle algorithms in both measurement orders.
//
// A trace carries two stage lists. `stages` is the physical flow: with Bob
// measuring first, every later state is sharp on B. `relative` is the same
// run described from Alice's standpoint, where B stays mixed until her own
// measurement; for n = 2 search this reproduces the displayed states.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "halfinfo/bits.hpp"
#include "halfinfo/problems.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

enum class Stage { Initial, AfterUB, AfterOracle, AfterUA, AfterBobMeasure, AfterAliceMeasure };
std::string_view stage_label(Stage stage);

enum class MeasurementOrder { BobFirst, BobLast };
std::string_view order_name(MeasurementOrder order);

struct TraceStage {
  Stage stage;
  std::string note;
  PhaseTaggedState state;
};

struct AlgorithmTrace {
  std::string family;
  MeasurementOrder order = MeasurementOrder::BobFirst;
  std::vector<TraceStage> stages;
  std::vector<TraceStage> relative;
  BasisIndex bob_selection = 0;  // B value Bob's measurement picked
  BasisIndex bob_outcome = 0;    // B value after U_B: the problem instance
  BasisIndex alice_outcome = 0;
  int evaluations = 0;
  /// Born probability that Alice's reading decodes to the right label.
  double success_probability = 0.0;
  bool success = false;
  std::string solution;  // label of Bob's table
  std::string answer;    // label decoded from Alice's reading

  /// Last stage with the given label. Throws std::out_of_range if absent.
  const PhaseTaggedState& at(Stage stage) const;
  const PhaseTaggedState& relative_at(Stage stage) const;
};

/// Unitary part applied after every oracle call, how often, and how Alice's
/// reading of A is turned into a solution label.
struct Schedule {
  Operator u_a;
  int iterations = 1;
  std::function<std::string(BasisIndex)> decode;
};

struct RunOptions {
  MeasurementOrder order = MeasurementOrder::BobFirst;
  /// Bob-first only: U_B swaps the measured value with this one.
  std::optional<BitString> bob_choice;
  /// Fixed U_B as a transposition of two B values (identity when empty).
  std::optional<std::pair<BitString, BitString>> u_b_swap;
  std::uint64_t seed = 0;
};

/// floor(pi/4 * 2^(n/2)) for n > 2, 1 for n <= 2.
int default_grover_iterations(int n);
/// Reflection of A about its uniform superposition.
Operator grover_diffusion(const RegisterLayout& layout);
/// Grover: diffusion, default iterations, A read as the marked string.
/// Deutsch-Jozsa: Hadamard, A = 0 read as constant. Perm: Hadamard, A read
/// as class 1..3. Other families: Hadamard, A read as its bit string.
Schedule default_schedule(const ProblemFamily& family);
/// Oracle followed by U_A, repeated `iterations` times.
Operator algorithm_unitary(const ProblemFamily& family, const Schedule& schedule);

/// Throws std::invalid_argument for a Bob choice outside the family, a Bob
/// choice with the Bob-last order, or a U_B swap with the Bob-first order
/// when a choice is also given.
AlgorithmTrace run_algorithm(const ProblemFamily& family, const Schedule& schedule, const RunOptions& options);

/// n in [2, 11]. `iterations` overrides the default count.
AlgorithmTrace run_grover(int n, const RunOptions& options, std::optional<int> iterations = std::nullopt);
AlgorithmTrace run_dj(int n, const RunOptions& options);
struct PermRun {
  int partition = 0;
  AlgorithmTrace trace;
};
/// Throws std::logic_error if A reads 00.
PermRun run_perm(const RunOptions& options);

/// P(A = b) after k = 1..k_max iterations, starting sharp on table `b`.
std::vector<double> grover_success_curve(int n, int k_max, BasisIndex b = 0);

struct SimonRun {
  std::optional<BitString> h;
  int evaluations = 0;
  std::vector<BitString> strings;
  std::vector<AlgorithmTrace> traces;
  BasisIndex table = 0;  // position of Bob's table in the family
};
/// Bob-first only. Throws std::runtime_error when `max_iterations` runs do
/// not yield n - 1 independent strings.
SimonRun run_simon(int n, const RunOptions& options, int max_iterations = 64);
SimonRun run_simon(const ProblemFamily& family, const RunOptions& options, int max_iterations = 64);

struct DeferredReport {
  /// Joint Born distribution of (Bob's selection, Alice's reading).
  JointDistribution bob_first;
  JointDistribution bob_last;
  double max_difference = 0.0;
  bool equal = false;
  /// Sampled runs whose Bob-last pair lies in the support of the Bob-first
  /// distribution; informational only.
  int trials = 0;
  int trials_in_support = 0;
};
DeferredReport deferred_equivalence(const ProblemFamily& family, const Schedule& schedule, int trials,
                                    std::uint64_t seed,
                                    std::optional<std::pair<BitString, BitString>> u_b_swap = std::nullopt);

}  // namespace halfinfo
