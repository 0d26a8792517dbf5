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

// Advanced information as half tables, exact minimax query counts with and
// without it, and the projector view of the same knowledge.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "halfinfo/problems.hpp"
#include "halfinfo/runner.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

/// Half of the rows of one table: the arguments (ascending) and, through the
/// family, their values.
struct HalfTable {
  std::size_t table = 0;
  std::vector<std::uint64_t> rows;
};

/// "{00:0,01:0}" style rendering.
std::string describe(const ProblemFamily& family, const HalfTable& half);
bool is_good(const ProblemFamily& family, const HalfTable& half);
/// All 2^(n-1)-row subsets of the table passing the family's predicate.
std::vector<HalfTable> enumerate_good_half_tables(const ProblemFamily& family, std::size_t table);

/// Tables still consistent with what has been observed.
class KnowledgeState {
 public:
  static KnowledgeState full(const ProblemFamily& family);
  static KnowledgeState from_half_table(const ProblemFamily& family, const HalfTable& half);
  /// Throws std::invalid_argument if no table agrees with the observation.
  KnowledgeState observe(std::uint64_t a, std::uint64_t value) const;

  const std::vector<std::size_t>& candidates() const { return candidates_; }
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& log() const { return log_; }

 private:
  KnowledgeState(const ProblemFamily& family, std::vector<std::size_t> candidates,
                 std::vector<std::pair<std::uint64_t, std::uint64_t>> log);

  ProblemFamily family_;
  std::vector<std::size_t> candidates_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> log_;
};

/// Exact minimax decision-tree depth for determining the solution label
/// with certainty. Memoizes on candidate sets for the lifetime of the
/// object, so one solver can serve many knowledge states of one family.
class MinimaxSolver {
 public:
  explicit MinimaxSolver(ProblemFamily family);
  /// Throws std::domain_error when no sequence of queries can separate the
  /// remaining labels.
  int solve(const std::vector<std::size_t>& candidates);
  std::size_t memo_size() const;

 private:
  struct Impl;
  ProblemFamily family_;
  std::shared_ptr<Impl> impl_;
};

int classical_query_complexity(const ProblemFamily& family, const KnowledgeState& knowledge);

struct HalfTableCount {
  std::size_t table = 0;
  HalfTable half;
  int count = 0;
};

struct QueryReport {
  std::string family;
  int quantum = 0;
  /// True when every table is solved with certainty by `quantum` oracle
  /// calls (for simon: every measured string is orthogonal to the period).
  bool quantum_exact = false;
  int classical = 0;
  int classical_with_info = 0;
  bool rule_holds = false;
  bool degenerate = false;  // a single table: nothing to query
  std::vector<HalfTableCount> breakdown;
};

/// Quantum count from runner traces (one Bob-first run per table with Bob's
/// choice fixed); classical counts by memoized minimax. Throws
/// std::invalid_argument for grover n > 4 (minimax not tractable).
QueryReport verify_fifty_rule(const ProblemFamily& family);

/// Schedule whose decoder reads the label off the A outcome of one oracle
/// call plus the Hadamard transform, for families where that outcome
/// determines the label. Used for perm and user-supplied families.
Schedule single_query_schedule(const ProblemFamily& family);

// Projector view.

struct HalfProjection {
  std::vector<BasisIndex> values;  // the two b = a values kept
  Projector projector;
};
/// For two-qubit search: the six projectors onto span{|x>_B|x>_A} over the
/// pairs x of {00, 01, 10, 11}, identity on V.
std::vector<HalfProjection> halved_projection_set(const RegisterLayout& layout);

/// Projector on the B values of the tables consistent with the half table.
Projector half_table_projector(const ProblemFamily& family, const HalfTable& half);

struct KnowledgeGain {
  PhaseTaggedState state;  // projected initial state
  double probability = 0.0;
  double entropy_before = 0.0;
  double entropy_after = 0.0;
};
/// Projects the family's initial state on U^dagger P U.
KnowledgeGain back_evolved_knowledge(const ProblemFamily& family, const Projector& p, const Operator& u_algorithm);

/// Deutsch-Jozsa: starting from the state after the oracle call and the
/// Hadamard transform, Alice reads the last qubit of A and finds the value
/// the pair is correlated with; Bob then reads the first bit of b and finds
/// 0. True iff the A-marginal entropy is unchanged by Bob's reading within
/// 1e-10. Throws std::invalid_argument unless the two tables are
/// complements of each other.
bool check_dual_projection_no_info(const ProblemFamily& family, const BitString& x, const BitString& y);

/// Classical mutual information between B and A readings after one oracle
/// call and the Hadamard transform; positive means both readings take part
/// in fixing b.
double both_parties_contribute(const ProblemFamily& family);

}  // namespace halfinfo
