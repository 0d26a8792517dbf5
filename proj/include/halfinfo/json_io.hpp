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

// JSON forms of the library's objects.
// Every document carries "schema": 1.

#pragma once

#include <string>

#include "json.hpp"

#include "halfinfo/fiftyrule.hpp"
#include "halfinfo/histories.hpp"
#include "halfinfo/problems.hpp"
#include "halfinfo/runner.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Per tag and B value, the A(x)V block as [re, im] pairs.
Json state_to_json(const PhaseTaggedState& state);
/// Stage labels with the B-marginal entropy of each stage, outcomes and
/// evaluation count.
Json trace_to_json(const AlgorithmTrace& trace, const ProblemFamily& family);
Json query_report_to_json(const QueryReport& report, const ProblemFamily& family);
/// One-row Markdown table: family, quantum, classical, classical+50%, rule.
std::string query_report_to_markdown(const QueryReport& report);

/// {"schema", "name", "n", "value_bits", "goodness", "v_init", "tables":
/// [{"b", "rows"}], "solutions": {b: label}, "weights"?}. Rows are value
/// bit strings listed by increasing argument.
Json family_to_json(const ProblemFamily& family);
/// Builds a FamilyKind::Custom family. Throws std::invalid_argument with a
/// readable message on any schema or consistency problem.
ProblemFamily family_from_json(const Json& doc);
ProblemFamily load_family(const std::string& path);

Json histories_to_json(const HistorySet& set, const ProblemFamily& family);

}  // namespace halfinfo
