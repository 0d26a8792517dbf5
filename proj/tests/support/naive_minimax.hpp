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

// Plain recursive minimax for cross-checking the memoized solver. No
// caching and no pruning: every unqueried argument is tried at every node.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "halfinfo/problems.hpp"

namespace halfinfo::testing {

inline constexpr int kInseparable = std::numeric_limits<int>::max() / 2;

inline int naive_minimax(const ProblemFamily& family, const std::vector<std::size_t>& candidates,
                         const std::vector<std::uint64_t>& unqueried) {
  std::set<std::string> labels;
  for (auto t : candidates) labels.insert(family.solution(t));
  if (labels.size() <= 1) return 0;
  int best = kInseparable;
  for (std::size_t i = 0; i < unqueried.size(); ++i) {
    const std::uint64_t a = unqueried[i];
    std::vector<std::uint64_t> rest = unqueried;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    std::map<std::uint64_t, std::vector<std::size_t>> groups;
    for (auto t : candidates) groups[family.value(t, a)].push_back(t);
    int worst = 0;
    for (const auto& [value, group] : groups) worst = std::max(worst, naive_minimax(family, group, rest));
    best = std::min(best, worst == kInseparable ? kInseparable : worst + 1);
  }
  return best;
}

inline std::vector<std::uint64_t> all_arguments(const ProblemFamily& family) {
  std::vector<std::uint64_t> args(family.arguments());
  for (std::size_t a = 0; a < args.size(); ++a) args[a] = a;
  return args;
}

}  // namespace halfinfo::testing
