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

#include "halfinfo/reference_states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>
#include <vector>

namespace halfinfo::reference {

namespace {

// (tag, b, a, v, coefficient)
using Term = std::tuple<PhaseTag, BasisIndex, BasisIndex, BasisIndex, Complex>;

PhaseTaggedState assemble(const RegisterLayout& layout, const std::vector<Term>& terms) {
  PhaseTaggedState::Branches branches;
  const auto block = static_cast<Eigen::Index>(layout.block_dim());
  const auto vdim = BasisIndex{1} << layout.nV();
  for (const auto& [tag, b, a, v, c] : terms) {
    auto& branch = branches[tag];
    auto it = branch.find(b);
    if (it == branch.end()) it = branch.emplace(b, CVector::Zero(block)).first;
    it->second[static_cast<Eigen::Index>(a * vdim + v)] += c;
  }
  return {layout, std::move(branches)};
}

// Appends c * |b>|a> (|0> - |1>)^{(x) nV} for one tag.
void add_minus(std::vector<Term>& terms, int nV, PhaseTag tag, BasisIndex b, BasisIndex a, Complex c) {
  for (BasisIndex v = 0; v < (BasisIndex{1} << nV); ++v) {
    const double sign = __builtin_popcountll(v) % 2 ? -1.0 : 1.0;
    terms.emplace_back(tag, b, a, v, sign * c);
  }
}

const RegisterLayout kSearch(2, 2, 1);
const RegisterLayout kBare(2, 2, 0);

}  // namespace

PhaseTaggedState search_initial_state() {
  const double c = 1.0 / (4.0 * std::sqrt(2.0));
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 4; ++b) {
    for (BasisIndex a = 0; a < 4; ++a) add_minus(terms, 1, b, b, a, c);
  }
  return assemble(kSearch, terms);
}

PhaseTaggedState search_after_oracle() {
  const double c = 1.0 / (4.0 * std::sqrt(2.0));
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 4; ++b) {
    for (BasisIndex a = 0; a < 4; ++a) add_minus(terms, 1, b, b, a, a == b ? -c : c);
  }
  return assemble(kSearch, terms);
}

PhaseTaggedState search_output() {
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 4; ++b) add_minus(terms, 1, b, b, b, c);
  return assemble(kSearch, terms);
}

PhaseTaggedState search_solution_eigenstate() {
  std::vector<Term> terms;
  add_minus(terms, 1, 0, 0, 0, 1.0 / std::sqrt(2.0));
  return assemble(kSearch, terms);
}

PhaseTaggedState search_half_projected_output() {
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 2; ++b) add_minus(terms, 1, b, b, b, 0.5);
  return assemble(kSearch, terms);
}

PhaseTaggedState search_back_evolved_half() {
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 2; ++b) {
    for (BasisIndex a = 0; a < 4; ++a) add_minus(terms, 1, b, b, a, 0.25);
  }
  return assemble(kSearch, terms);
}

PhaseTaggedState bare_initial_state() {
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 4; ++b) {
    for (BasisIndex a = 0; a < 4; ++a) terms.emplace_back(b, b, a, 0, 0.25);
  }
  return assemble(kBare, terms);
}

PhaseTaggedState bare_selected_state() {
  std::vector<Term> terms;
  for (BasisIndex a = 0; a < 4; ++a) terms.emplace_back(1, 1, a, 0, 0.5);
  return assemble(kBare, terms);
}

PhaseTaggedState bare_prepared_state() {
  std::vector<Term> terms;
  for (BasisIndex a = 0; a < 4; ++a) terms.emplace_back(1, 0, a, 0, 0.5);
  return assemble(kBare, terms);
}

PhaseTaggedState bare_output() { return assemble(kBare, {{0, 0, 0, 0, 1.0}}); }

PhaseTaggedState bare_correlated_state() {
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 4; ++b) terms.emplace_back(b, b, b, 0, 0.5);
  return assemble(kBare, terms);
}

PhaseTaggedState bare_back_evolved_half() {
  const double c = 1.0 / (2.0 * std::sqrt(2.0));
  std::vector<Term> terms;
  for (BasisIndex b = 0; b < 2; ++b) {
    for (BasisIndex a = 0; a < 4; ++a) terms.emplace_back(b, b, a, 0, c);
  }
  return assemble(kBare, terms);
}

namespace {

struct DjColumn {
  BasisIndex b;
  BasisIndex s;  // A state after the Hadamard transform
  double sign;
};

constexpr std::array<DjColumn, 8> kDjColumns = {{
    {0b0000, 0b00, 1.0},
    {0b1111, 0b00, -1.0},
    {0b0011, 0b10, 1.0},
    {0b1100, 0b10, -1.0},
    {0b0101, 0b01, 1.0},
    {0b1010, 0b01, -1.0},
    {0b0110, 0b11, 1.0},
    {0b1001, 0b11, -1.0},
}};

struct SimonColumn {
  BasisIndex b;
  BasisIndex s;  // nonzero string orthogonal to the period
};

constexpr std::array<SimonColumn, 6> kSimonColumns = {{
    {0b0011, 0b10},
    {0b1100, 0b10},
    {0b0101, 0b01},
    {0b1010, 0b01},
    {0b0110, 0b11},
    {0b1001, 0b11},
}};

const RegisterLayout kDj(4, 2, 1);
const RegisterLayout kSimon(4, 2, 1);
const RegisterLayout kPerm(8, 2, 2);

std::vector<std::array<BasisIndex, 4>> permutations() {
  std::array<BasisIndex, 4> values = {0, 1, 2, 3};
  std::vector<std::array<BasisIndex, 4>> out;
  do {
    out.push_back(values);
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

}  // namespace

PhaseTaggedState dj_initial_state() {
  const double rho = 1.0 / std::sqrt(8.0);
  const double c = rho / (2.0 * std::sqrt(2.0));
  std::vector<Term> terms;
  for (PhaseTag t = 0; t < static_cast<PhaseTag>(kDjColumns.size()); ++t) {
    for (BasisIndex a = 0; a < 4; ++a) add_minus(terms, 1, t, kDjColumns[t].b, a, c);
  }
  return assemble(kDj, terms);
}

PhaseTaggedState dj_after_hadamard() {
  const double rho = 1.0 / std::sqrt(8.0);
  std::vector<Term> terms;
  for (PhaseTag t = 0; t < static_cast<PhaseTag>(kDjColumns.size()); ++t) {
    const auto& col = kDjColumns[t];
    add_minus(terms, 1, t, col.b, col.s, col.sign * rho / std::sqrt(2.0));
  }
  return assemble(kDj, terms);
}

PhaseTaggedState simon_initial_state() {
  const double c = 0.5 / std::sqrt(6.0);
  std::vector<Term> terms;
  for (PhaseTag t = 0; t < static_cast<PhaseTag>(kSimonColumns.size()); ++t) {
    for (BasisIndex a = 0; a < 4; ++a) terms.emplace_back(t, kSimonColumns[t].b, a, 0, c);
  }
  return assemble(kSimon, terms);
}

PhaseTaggedState simon_after_hadamard_as_displayed() {
  const double c = 0.5 / std::sqrt(6.0);
  std::vector<Term> terms;
  for (PhaseTag t = 0; t < static_cast<PhaseTag>(kSimonColumns.size()); ++t) {
    const auto& col = kSimonColumns[t];
    terms.emplace_back(t, col.b, 0b00, 0, c);
    terms.emplace_back(t, col.b, col.s, 0, c);
    terms.emplace_back(t, col.b, 0b00, 1, c);
    terms.emplace_back(t, col.b, col.s, 1, -c);
  }
  return assemble(kSimon, terms);
}

PhaseTaggedState perm_initial_state() {
  const double c = 1.0 / (8.0 * std::sqrt(6.0));
  std::vector<Term> terms;
  PhaseTag t = 0;
  for (const auto& f : permutations()) {
    const BasisIndex b = (f[0] << 6) | (f[1] << 4) | (f[2] << 2) | f[3];
    for (BasisIndex a = 0; a < 4; ++a) add_minus(terms, 2, t, b, a, c);
    ++t;
  }
  return assemble(kPerm, terms);
}

PhaseTaggedState perm_after_hadamard() {
  const double c = 1.0 / (4.0 * std::sqrt(6.0));
  std::vector<Term> terms;
  PhaseTag t = 0;
  for (const auto& f : permutations()) {
    const BasisIndex b = (f[0] << 6) | (f[1] << 4) | (f[2] << 2) | f[3];
    // The argument whose image shares the parity of f(00) fixes the A state:
    // 01 -> |10>, 10 -> |01>, 11 -> |11>.
    const auto parity = [&](BasisIndex a) { return __builtin_popcountll(f[a]) % 2; };
    BasisIndex s = 0;
    if (parity(1) == parity(0)) s = 0b10;
    if (parity(2) == parity(0)) s = 0b01;
    if (parity(3) == parity(0)) s = 0b11;
    add_minus(terms, 2, t, b, s, c);
    ++t;
  }
  return assemble(kPerm, terms);
}

}  // namespace halfinfo::reference
