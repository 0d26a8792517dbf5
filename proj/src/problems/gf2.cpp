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

#include <stdexcept>
#include <vector>

#include "halfinfo/problems.hpp"

namespace halfinfo {

namespace {

struct Echelon {
  std::vector<std::uint64_t> rows;  // reduced rows, one pivot each
  std::vector<int> pivots;          // pivot bit (as a shift amount) per row
  int width = 0;
};

Echelon reduce(const std::vector<BitString>& strings) {
  if (strings.empty()) throw std::invalid_argument("gf2: empty list");
  Echelon e;
  e.width = strings.front().width;
  for (const auto& s : strings) {
    if (s.width != e.width) throw std::invalid_argument("gf2: mixed widths");
    std::uint64_t row = s.bits;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if ((row >> e.pivots[i]) & 1u) row ^= e.rows[i];
    }
    if (row == 0) continue;
    int pivot = 63 - __builtin_clzll(row);
    for (auto& r : e.rows) {
      if ((r >> pivot) & 1u) r ^= row;
    }
    e.rows.push_back(row);
    e.pivots.push_back(pivot);
  }
  return e;
}

}  // namespace

int gf2_rank(const std::vector<BitString>& strings) { return static_cast<int>(reduce(strings).rows.size()); }

std::vector<BitString> gf2_solve(const std::vector<BitString>& strings) {
  const Echelon e = reduce(strings);
  std::uint64_t pivot_mask = 0;
  for (const int p : e.pivots) pivot_mask |= std::uint64_t{1} << p;
  std::vector<BitString> basis;
  // Free bits from the most significant end so the output order is stable.
  for (int free = e.width - 1; free >= 0; --free) {
    if ((pivot_mask >> free) & 1u) continue;
    std::uint64_t h = std::uint64_t{1} << free;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      if ((e.rows[i] >> free) & 1u) h |= std::uint64_t{1} << e.pivots[i];
    }
    basis.push_back({h, e.width});
  }
  return basis;
}

}  // namespace halfinfo
