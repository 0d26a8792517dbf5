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

// Closed-form constructions of the states displayed for the worked
// examples, built term by term from their written coefficients rather than
// by running the algorithms. Tests compare runner traces against these.

#pragma once

#include "halfinfo/statevec.hpp"

namespace halfinfo::reference {

// Two-qubit search with B, A and a one-qubit V prepared in |0> - |1>.
// Tags 0..3 stand for b = 00..11.
PhaseTaggedState search_initial_state();
PhaseTaggedState search_after_oracle();
PhaseTaggedState search_output();
/// Sharp solution state |00>_B |00>_A (|0> - |1>)/sqrt2.
PhaseTaggedState search_solution_eigenstate();
/// Output projected on a0 = 0.
PhaseTaggedState search_half_projected_output();
/// Initial state restricted to b in {00, 01}.
PhaseTaggedState search_back_evolved_half();

// The same example without register V (layout 2, 2, 0).
PhaseTaggedState bare_initial_state();
/// Bob found b = 01.
PhaseTaggedState bare_selected_state();
/// After Bob relabels 01 as 00.
PhaseTaggedState bare_prepared_state();
PhaseTaggedState bare_output();
/// Sum over b of |b>_B |b>_A with independent phases.
PhaseTaggedState bare_correlated_state();
PhaseTaggedState bare_back_evolved_half();

// Deutsch-Jozsa, n = 2, uniform weights. Tags follow the column order
// 0000, 1111, 0011, 1100, 0101, 1010, 0110, 1001.
PhaseTaggedState dj_initial_state();
PhaseTaggedState dj_after_hadamard();

// Simon, n = 2, uniform weights. Tags follow 0011, 1100, 0101, 1010, 0110,
// 1001.
PhaseTaggedState simon_initial_state();
/// As displayed: every table of a dual pair shares the bracket of the
/// table with f(00) = 0.
PhaseTaggedState simon_after_hadamard_as_displayed();

// Permutation family. Tags follow lexicographic order of the value
// sequence.
PhaseTaggedState perm_initial_state();
/// Each table correlated with the A state its class is read from.
PhaseTaggedState perm_after_hadamard();

}  // namespace halfinfo::reference
