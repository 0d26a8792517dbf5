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
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

#include "detail.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

double unitarity_defect(const CMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  const CMatrix d = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

CMatrix hadamard(int qubits) {
  CMatrix h(1, 1);
  h(0, 0) = 1.0;
  CMatrix h1(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h1 << s, s, s, -s;
  for (int q = 0; q < qubits; ++q) {
    CMatrix next(h.rows() * 2, h.cols() * 2);
    for (Eigen::Index i = 0; i < 2; ++i) {
      for (Eigen::Index j = 0; j < 2; ++j) next.block(i * h.rows(), j * h.cols(), h.rows(), h.cols()) = h1(i, j) * h;
    }
    h = std::move(next);
  }
  return h;
}

Operator Operator::local(const RegisterLayout& layout, CMatrix u, RegisterSet target, std::string label) {
  if (target.empty()) throw std::invalid_argument("unitary target must name at least one register");
  const auto dim = static_cast<Eigen::Index>(layout.dim(target));
  if (u.rows() != dim || u.cols() != dim) {
    throw std::invalid_argument("unitary '" + label + "' has size " + std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + ", target " + target.str() + " needs " +
                                std::to_string(dim));
  }
  if (unitarity_defect(u) > kUnitarityTolerance) {
    throw std::invalid_argument("matrix '" + label + "' is not unitary");
  }
  Operator op;
  op.steps_.push_back({LocalStep{std::move(u), target}, std::move(label)});
  return op;
}

Operator Operator::permutation(IndexMap forward, IndexMap inverse, std::string label) {
  Operator op;
  op.steps_.push_back({PermutationStep{std::move(forward), std::move(inverse)}, std::move(label)});
  return op;
}

Operator Operator::reflection(const RegisterLayout& layout, CVector axis, RegisterSet target, std::string label) {
  if (target.empty()) throw std::invalid_argument("reflection target must name at least one register");
  if (static_cast<BasisIndex>(axis.size()) != layout.dim(target)) {
    throw std::invalid_argument("reflection axis has wrong dimension");
  }
  const double norm = axis.norm();
  if (norm == 0.0) throw std::invalid_argument("reflection axis is zero");
  Operator op;
  op.steps_.push_back({ReflectionStep{axis / norm, target}, std::move(label)});
  return op;
}

Operator Operator::then(const Operator& next) const {
  Operator out = *this;
  out.steps_.insert(out.steps_.end(), next.steps_.begin(), next.steps_.end());
  return out;
}

Operator::Step Operator::adjoint_of(const Step& step) {
  return std::visit(
      [&](const auto& k) -> Step {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LocalStep>) {
          return {LocalStep{k.u.adjoint(), k.target}, step.label + "^dag"};
        } else if constexpr (std::is_same_v<K, PermutationStep>) {
          return {PermutationStep{k.inverse, k.forward}, step.label + "^dag"};
        } else {
          return step;
        }
      },
      step.kind);
}

Operator Operator::adjoint() const {
  Operator out;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) out.steps_.push_back(adjoint_of(*it));
  return out;
}

std::string Operator::label() const {
  if (steps_.empty()) return "identity";
  std::string s;
  for (const auto& step : steps_) {
    if (!s.empty()) s += " -> ";
    s += step.label;
  }
  return s;
}

void Operator::apply_step(const Step& step, const RegisterLayout& layout, PhaseTaggedState::Branch& branch) {
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, LocalStep>) {
          detail::transform_branch(layout, branch, k.target, [&](CVector& x) { x = k.u * x; });
        } else if constexpr (std::is_same_v<K, ReflectionStep>) {
          detail::transform_branch(layout, branch, k.target, [&](CVector& x) {
            const Complex overlap = k.axis.dot(x);
            x = 2.0 * overlap * k.axis - x;
          });
        } else {
          const BasisIndex bd = layout.block_dim();
          const int shift = layout.nA() + layout.nV();
          PhaseTaggedState::Branch out;
          for (const auto& [b, block] : branch) {
            for (BasisIndex j = 0; j < bd; ++j) {
              const Complex amp = block[static_cast<Eigen::Index>(j)];
              if (amp == Complex{}) continue;
              const BasisIndex dest = k.forward((b << shift) | j);
              auto [it, inserted] = out.try_emplace(dest >> shift);
              if (inserted) it->second = CVector::Zero(static_cast<Eigen::Index>(bd));
              it->second[static_cast<Eigen::Index>(dest & (bd - 1))] += amp;
            }
          }
          branch = std::move(out);
        }
      },
      step.kind);
}

void Operator::apply(const RegisterLayout& layout, PhaseTaggedState::Branch& branch) const {
  for (const auto& step : steps_) apply_step(step, layout, branch);
}

CMatrix Operator::matrix(const RegisterLayout& layout) const {
  if (layout.dim() > kMaxDenseDim) throw std::length_error("operator too large for a dense matrix");
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

}  // namespace halfinfo
