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

#include <cmath>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

namespace detail {

CVector to_dense(const RegisterLayout& layout, const PhaseTaggedState::Branch& branch) {
  CVector out = CVector::Zero(static_cast<Eigen::Index>(layout.dim()));
  const auto bd = static_cast<Eigen::Index>(layout.block_dim());
  for (const auto& [b, block] : branch) {
    out.segment(static_cast<Eigen::Index>(b) * bd, bd) = block;
  }
  return out;
}

PhaseTaggedState::Branch to_branch(const RegisterLayout& layout, const CVector& dense) {
  PhaseTaggedState::Branch out;
  const auto bd = static_cast<Eigen::Index>(layout.block_dim());
  const BasisIndex nblocks = layout.dim(Register::B);
  for (BasisIndex b = 0; b < nblocks; ++b) {
    CVector block = dense.segment(static_cast<Eigen::Index>(b) * bd, bd);
    if (block.squaredNorm() > 1e-30) out.emplace(b, std::move(block));
  }
  return out;
}

void transform_branch(const RegisterLayout& layout, PhaseTaggedState::Branch& branch, RegisterSet target,
                      const std::function<void(CVector&)>& fn) {
  if (!target.contains(Register::B)) {
    const Bits bits = Bits::block_of(layout);
    for (auto& [b, block] : branch) for_each_slice(block, bits, target, fn);
    return;
  }
  CVector full = to_dense(layout, branch);
  for_each_slice(full, Bits::of(layout), target, fn);
  branch = to_branch(layout, full);
}

void prune(PhaseTaggedState::Branch& branch) {
  for (auto it = branch.begin(); it != branch.end();) {
    if (it->second.squaredNorm() == 0.0) {
      it = branch.erase(it);
    } else {
      ++it;
    }
  }
}

double branch_norm_squared(const PhaseTaggedState::Branch& branch) {
  double total = 0.0;
  for (const auto& [b, block] : branch) total += block.squaredNorm();
  return total;
}

}  // namespace detail

PhaseTaggedState::PhaseTaggedState(RegisterLayout layout, Branches branches)
    : layout_(layout), branches_(std::move(branches)) {
  const BasisIndex nblocks = layout_.dim(Register::B);
  for (const auto& [tag, branch] : branches_) {
    for (const auto& [b, block] : branch) {
      if (b >= nblocks) {
        throw std::invalid_argument("B index " + std::to_string(b) + " out of range in branch " +
                                    std::to_string(tag));
      }
      if (static_cast<BasisIndex>(block.size()) != layout_.block_dim()) {
        throw std::invalid_argument("block size mismatch in branch " + std::to_string(tag));
      }
    }
  }
  const double norm = norm_squared();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("phase-tagged state is not normalized (norm^2 = " + std::to_string(norm) + ")");
  }
}

PhaseTaggedState::PhaseTaggedState(NoCheck, RegisterLayout layout, Branches branches)
    : layout_(layout), branches_(std::move(branches)) {}

PhaseTaggedState PhaseTaggedState::unchecked(RegisterLayout layout, Branches branches) {
  return PhaseTaggedState(NoCheck{}, layout, std::move(branches));
}

PhaseTaggedState PhaseTaggedState::from_dense(RegisterLayout layout, const std::map<PhaseTag, CVector>& dense) {
  Branches branches;
  for (const auto& [tag, vec] : dense) {
    if (static_cast<BasisIndex>(vec.size()) != layout.dim()) {
      throw std::invalid_argument("dense branch has wrong length");
    }
    auto branch = detail::to_branch(layout, vec);
    if (!branch.empty()) branches.emplace(tag, std::move(branch));
  }
  return PhaseTaggedState(layout, std::move(branches));
}

std::vector<PhaseTag> PhaseTaggedState::tags() const {
  std::vector<PhaseTag> out;
  out.reserve(branches_.size());
  for (const auto& [tag, branch] : branches_) out.push_back(tag);
  return out;
}

double PhaseTaggedState::norm_squared() const {
  double total = 0.0;
  for (const auto& [tag, branch] : branches_) total += detail::branch_norm_squared(branch);
  return total;
}

BasisIndex PhaseTaggedState::stored_amplitudes() const {
  BasisIndex total = 0;
  for (const auto& [tag, branch] : branches_) total += branch.size() * layout_.block_dim();
  return total;
}

Complex PhaseTaggedState::amplitude(PhaseTag tag, BasisIndex full) const {
  const auto it = branches_.find(tag);
  if (it == branches_.end()) return {};
  const auto block = it->second.find(layout_.b_of(full));
  if (block == it->second.end()) return {};
  return block->second[static_cast<Eigen::Index>(full & (layout_.block_dim() - 1))];
}

CVector PhaseTaggedState::dense(PhaseTag tag) const {
  const auto it = branches_.find(tag);
  if (it == branches_.end()) return CVector::Zero(static_cast<Eigen::Index>(layout_.dim()));
  return detail::to_dense(layout_, it->second);
}

}  // namespace halfinfo
