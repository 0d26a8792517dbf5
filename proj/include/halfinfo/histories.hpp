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

// Classical computation histories generated by a half table, the
// reconstruction of the oracle stage from them, and the search for U_A.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "halfinfo/fiftyrule.hpp"
#include "halfinfo/problems.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

/// One classical evaluation written as a pair of sharp basis states sharing
/// the phase tag of their table.
struct ComputationHistory {
  PhaseTag tag = 0;
  BasisIndex b = 0;
  std::uint64_t a = 0;
  std::uint64_t v_init = 0;
  BasisIndex initial = 0;  // full basis index before the oracle call
  BasisIndex final = 0;    // full basis index after it

  friend auto operator<=>(const ComputationHistory&, const ComputationHistory&) = default;
};

/// One history per table consistent with the half table. Throws
/// std::invalid_argument if `a` is one of the half table's rows or `v_init`
/// is not a V basis value.
std::vector<ComputationHistory> enumerate_histories(const ProblemFamily& family, const HalfTable& half,
                                                    std::uint64_t a, std::uint64_t v_init);

struct HistorySet {
  std::vector<HalfTable> sources;
  std::vector<ComputationHistory> histories;  // distinct, sorted
  /// How many (half table, query) pairs produced each history.
  std::map<std::pair<BasisIndex, BasisIndex>, int> multiplicity;
};

/// Histories over every query outside each half table and every V basis
/// value; `only_a` keeps a single query argument.
HistorySet collect_histories(const ProblemFamily& family, const std::vector<HalfTable>& halves,
                             std::optional<std::uint64_t> only_a = std::nullopt);

struct Reconstruction {
  std::vector<Complex> coefficients;  // one per history, in set order
  double residual = 0.0;              // |target - sum c_h initial_h|
  double linearity_residual = 0.0;    // |oracle(target) - sum c_h final_h|
  bool ok = false;                    // both below 1e-10
};

/// Least-squares weights c_h with sum c_h |initial_h> equal to the family's
/// initial state restricted to the B values and A columns the histories
/// visit, followed by the linearity check against the oracle image.
Reconstruction span_reconstruction(const ProblemFamily& family, const HistorySet& histories);
Reconstruction span_reconstruction(const ProblemFamily& family, const HalfTable& half,
                                   std::optional<std::uint64_t> only_a = std::nullopt);
/// Same weights against the full, unrestricted initial state.
Reconstruction full_reconstruction(const ProblemFamily& family, const HistorySet& histories);

enum class SynthesisObjective { Entanglement, ReadableInfo };
std::string_view objective_name(SynthesisObjective objective);

/// Quantum mutual information S(B) + S(A) - S(BA) with V traced out.
double entanglement_objective(const PhaseTaggedState& state);
/// Classical mutual information between the solution label of Bob's table
/// and Alice's computational-basis reading of A.
double readable_info_objective(const ProblemFamily& family, const PhaseTaggedState& state);

struct SynthesisResult {
  CMatrix u_a;
  double value = 0.0;
  int restart = 0;  // restart that produced the best value
  int evaluations = 0;
};

/// Derivative-free coordinate search over a product of two-level rotations
/// and diagonal phases, from `restarts` random starting points. The
/// objective is evaluated on the state after one oracle call and U_A. Best
/// value wins; ties go to the lowest restart index.
SynthesisResult synthesize_UA(const ProblemFamily& family, SynthesisObjective objective, int restarts,
                              std::uint64_t seed);

struct ObjectiveComparison {
  SynthesisResult entanglement;
  SynthesisResult readable_info;
  /// Entanglement of the readable-info maximizer and vice versa.
  double entanglement_at_readable_best = 0.0;
  double readable_at_entanglement_best = 0.0;
  /// True when neither maximizer is optimal for the other objective within
  /// 1e-6, i.e. no common maximizer was found.
  bool maximizers_differ = false;
};
ObjectiveComparison compare_objectives(const ProblemFamily& family, int restarts, std::uint64_t seed);

/// Unitary built from the search parameters (exposed for tests).
CMatrix givens_unitary(int dim, const std::vector<double>& params);
int givens_parameter_count(int dim);

}  // namespace halfinfo
