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

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/QR>

#include "halfinfo/histories.hpp"

namespace halfinfo {

std::vector<ComputationHistory> enumerate_histories(const ProblemFamily& family, const HalfTable& half,
                                                    std::uint64_t a, std::uint64_t v_init) {
  if (a >= family.arguments()) throw std::invalid_argument("query argument out of range");
  if (std::find(half.rows.begin(), half.rows.end(), a) != half.rows.end()) {
    throw std::invalid_argument("query " + to_bits(a, family.n()) + " is inside the half table");
  }
  const RegisterLayout& layout = family.layout();
  if (v_init >= layout.dim(Register::V)) throw std::invalid_argument("v_init is not a V basis value");
  std::vector<ComputationHistory> out;
  const KnowledgeState knowledge = KnowledgeState::from_half_table(family, half);
  for (const auto t : knowledge.candidates()) {
    const BasisIndex b = family.table(t).index.bits;
    const std::uint64_t v_final = v_init ^ family.value(t, a);
    out.push_back({static_cast<PhaseTag>(t), b, a, v_init, layout.compose(b, a, v_init), layout.compose(b, a, v_final)});
  }
  return out;
}

HistorySet collect_histories(const ProblemFamily& family, const std::vector<HalfTable>& halves,
                             std::optional<std::uint64_t> only_a) {
  HistorySet set;
  set.sources = halves;
  std::set<ComputationHistory> distinct;
  const BasisIndex vdim = family.layout().dim(Register::V);
  for (const auto& half : halves) {
    for (std::uint64_t a = 0; a < family.arguments(); ++a) {
      if (std::find(half.rows.begin(), half.rows.end(), a) != half.rows.end()) continue;
      if (only_a && *only_a != a) continue;
      for (BasisIndex v = 0; v < vdim; ++v) {
        for (const auto& h : enumerate_histories(family, half, a, v)) {
          distinct.insert(h);
          ++set.multiplicity[{h.initial, h.final}];
        }
      }
    }
  }
  set.histories.assign(distinct.begin(), distinct.end());
  return set;
}

namespace {

Reconstruction reconstruct(const ProblemFamily& family, const HistorySet& set, bool restrict_target) {
  if (set.histories.empty()) throw std::invalid_argument("no histories to reconstruct from");
  const RegisterLayout& layout = family.layout();
  std::set<std::pair<BasisIndex, BasisIndex>> visited;
  for (const auto& h : set.histories) visited.insert({h.b, h.a});

  // Target: the prepared initial state, optionally cut down to the visited
  // (b, a) pairs. Kept unnormalized.
  const PhaseTaggedState initial = prepare_initial(family);
  PhaseTaggedState::Branches cut;
  const auto vdim = static_cast<Eigen::Index>(layout.dim(Register::V));
  for (const auto& [tag, branch] : initial.branches()) {
    for (const auto& [b, block] : branch) {
      CVector kept = block;
      if (restrict_target) {
        for (Eigen::Index a = 0; a < block.size() / vdim; ++a) {
          if (!visited.count({b, static_cast<BasisIndex>(a)})) kept.segment(a * vdim, vdim).setZero();
        }
      }
      cut[tag][b] = kept;
    }
  }
  const PhaseTaggedState target = PhaseTaggedState::unchecked(layout, cut);
  const PhaseTaggedState image = apply(target, oracle_unitary(family));

  Reconstruction rec;
  rec.coefficients.assign(set.histories.size(), Complex(0.0, 0.0));
  double residual2 = 0.0;
  double linearity2 = 0.0;
  for (const auto& [tag, branch] : target.branches()) {
    std::vector<std::size_t> columns;
    for (std::size_t i = 0; i < set.histories.size(); ++i) {
      if (set.histories[i].tag == tag) columns.push_back(i);
    }
    // Rows: every basis index touched by the target or by a history.
    std::set<BasisIndex> rows_in;
    std::set<BasisIndex> rows_out;
    for (const auto& [b, block] : branch) {
      for (Eigen::Index k = 0; k < block.size(); ++k) {
        if (std::abs(block[k]) > 0.0) rows_in.insert(layout.compose(b, 0, 0) + static_cast<BasisIndex>(k));
      }
    }
    if (const auto img = image.branches().find(tag); img != image.branches().end()) {
      for (const auto& [b, block] : img->second) {
        for (Eigen::Index k = 0; k < block.size(); ++k) {
          if (std::abs(block[k]) > 0.0) rows_out.insert(layout.compose(b, 0, 0) + static_cast<BasisIndex>(k));
        }
      }
    }
    for (const auto i : columns) {
      rows_in.insert(set.histories[i].initial);
      rows_out.insert(set.histories[i].final);
    }
    const std::vector<BasisIndex> in(rows_in.begin(), rows_in.end());
    const std::vector<BasisIndex> out(rows_out.begin(), rows_out.end());
    auto row_of = [](const std::vector<BasisIndex>& rows, BasisIndex x) {
      return static_cast<Eigen::Index>(std::lower_bound(rows.begin(), rows.end(), x) - rows.begin());
    };

    CMatrix h_in = CMatrix::Zero(static_cast<Eigen::Index>(in.size()), static_cast<Eigen::Index>(columns.size()));
    CMatrix h_out = CMatrix::Zero(static_cast<Eigen::Index>(out.size()), static_cast<Eigen::Index>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      h_in(row_of(in, set.histories[columns[c]].initial), static_cast<Eigen::Index>(c)) = 1.0;
      h_out(row_of(out, set.histories[columns[c]].final), static_cast<Eigen::Index>(c)) = 1.0;
    }
    CVector t_in(static_cast<Eigen::Index>(in.size()));
    for (std::size_t r = 0; r < in.size(); ++r) t_in[static_cast<Eigen::Index>(r)] = target.amplitude(tag, in[r]);
    CVector t_out(static_cast<Eigen::Index>(out.size()));
    for (std::size_t r = 0; r < out.size(); ++r) t_out[static_cast<Eigen::Index>(r)] = image.amplitude(tag, out[r]);

    CVector c = CVector::Zero(static_cast<Eigen::Index>(columns.size()));
    if (!columns.empty()) c = h_in.colPivHouseholderQr().solve(t_in);
    residual2 += (h_in * c - t_in).squaredNorm();
    linearity2 += (h_out * c - t_out).squaredNorm();
    for (std::size_t k = 0; k < columns.size(); ++k) rec.coefficients[columns[k]] = c[static_cast<Eigen::Index>(k)];
  }
  rec.residual = std::sqrt(residual2);
  rec.linearity_residual = std::sqrt(linearity2);
  rec.ok = rec.residual < 1e-10 && rec.linearity_residual < 1e-10;
  return rec;
}

}  // namespace

Reconstruction span_reconstruction(const ProblemFamily& family, const HistorySet& histories) {
  return reconstruct(family, histories, true);
}

Reconstruction span_reconstruction(const ProblemFamily& family, const HalfTable& half,
                                   std::optional<std::uint64_t> only_a) {
  return reconstruct(family, collect_histories(family, {half}, only_a), true);
}

Reconstruction full_reconstruction(const ProblemFamily& family, const HistorySet& histories) {
  return reconstruct(family, histories, false);
}

}  // namespace halfinfo
