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
#include <bit>
#include <stdexcept>
#include <string>

#include "detail.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

Projector Projector::identity(std::string description) {
  Projector p;
  p.kind_ = Kind::Identity;
  p.target_ = RegisterSet::all();
  p.description_ = std::move(description);
  return p;
}

Projector Projector::onto_basis(RegisterSet target, std::vector<BasisIndex> indices, std::string description) {
  if (target.empty()) throw std::invalid_argument("projector target must name at least one register");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  Projector p;
  p.kind_ = Kind::Basis;
  p.target_ = target;
  p.indices_ = std::move(indices);
  p.description_ = std::move(description);
  return p;
}

Projector Projector::onto_vectors(const RegisterLayout& layout, RegisterSet target, CMatrix vectors,
                                  std::string description) {
  if (target.empty()) throw std::invalid_argument("projector target must name at least one register");
  if (static_cast<BasisIndex>(vectors.rows()) != layout.dim(target)) {
    throw std::invalid_argument("projector vectors have wrong dimension for target " + target.str());
  }
  const CMatrix gram = vectors.adjoint() * vectors;
  if ((gram - CMatrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() > kUnitarityTolerance) {
    throw std::invalid_argument("projector vectors are not orthonormal");
  }
  Projector p;
  p.kind_ = Kind::Vectors;
  p.target_ = target;
  p.vectors_ = std::move(vectors);
  p.description_ = std::move(description);
  return p;
}

Projector Projector::complement(std::string description) const {
  Projector p = *this;
  if (kind_ == Kind::Identity) {
    p.kind_ = Kind::Basis;
    p.target_ = Register::B;
    p.indices_.clear();
    p.complement_ = false;
  } else {
    p.complement_ = !complement_;
  }
  p.description_ = std::move(description);
  return p;
}

Projector Projector::conjugated(const Operator& u) const {
  Projector p = *this;
  p.conjugation_ = u.then(conjugation_);
  p.description_ = description_ + " back-evolved through [" + u.label() + "]";
  return p;
}

void Projector::apply_core(const RegisterLayout& layout, PhaseTaggedState::Branch& branch) const {
  switch (kind_) {
    case Kind::Identity:
      break;
    case Kind::Basis: {
      const BasisIndex bd = layout.block_dim();
      const int shift = layout.nA() + layout.nV();
      for (auto& [b, block] : branch) {
        for (BasisIndex j = 0; j < bd; ++j) {
          auto& amp = block[static_cast<Eigen::Index>(j)];
          if (amp == Complex{}) continue;
          const BasisIndex idx = layout.extract(target_, (b << shift) | j);
          const bool member = std::binary_search(indices_.begin(), indices_.end(), idx);
          if (member == complement_) amp = Complex{};
        }
      }
      break;
    }
    case Kind::Vectors:
      detail::transform_branch(layout, branch, target_, [&](CVector& x) {
        const CVector px = vectors_ * (vectors_.adjoint() * x);
        x = complement_ ? CVector(x - px) : px;
      });
      break;
  }
  detail::prune(branch);
}

void Projector::apply(const RegisterLayout& layout, PhaseTaggedState::Branch& branch) const {
  if (conjugation_.is_identity()) {
    apply_core(layout, branch);
    return;
  }
  conjugation_.apply(layout, branch);
  apply_core(layout, branch);
  conjugation_.adjoint().apply(layout, branch);
  detail::prune(branch);
}

CMatrix Projector::matrix(const RegisterLayout& layout) const {
  if (layout.dim() > kMaxDenseDim) throw std::length_error("projector too large for a dense matrix");
  const auto dim = static_cast<Eigen::Index>(layout.dim());
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    CVector e = CVector::Zero(dim);
    e[col] = 1.0;
    auto branch = detail::to_branch(layout, e);
    apply(layout, branch);
    out.col(col) = detail::to_dense(layout, branch);
  }
  return out;
}

Projector back_evolve_projector(const Projector& p, const Operator& u_total) { return p.conjugated(u_total); }

BinaryObservable qubit_observable(const RegisterLayout& layout, Register reg, int qubit, std::string label) {
  const int width = layout.qubits(reg);
  if (qubit < 0 || qubit >= width) throw std::invalid_argument("qubit index out of range for observable " + label);
  std::vector<BasisIndex> zeros;
  const BasisIndex dim = layout.dim(reg);
  const int shift = width - 1 - qubit;
  for (BasisIndex i = 0; i < dim; ++i) {
    if (((i >> shift) & 1u) == 0) zeros.push_back(i);
  }
  auto zero = Projector::onto_basis(reg, std::move(zeros), label + "=0");
  auto one = zero.complement(label + "=1");
  return {std::move(label), std::move(zero), std::move(one)};
}

BinaryObservable parity_observable(const RegisterLayout& layout, Register reg, std::string label) {
  std::vector<BasisIndex> even;
  const BasisIndex dim = layout.dim(reg);
  for (BasisIndex i = 0; i < dim; ++i) {
    if (std::popcount(i) % 2 == 0) even.push_back(i);
  }
  auto zero = Projector::onto_basis(reg, std::move(even), label + "=0");
  auto one = zero.complement(label + "=1");
  return {std::move(label), std::move(zero), std::move(one)};
}

}  // namespace halfinfo
