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
#include <string>

#include <Eigen/Eigenvalues>

#include "detail.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

namespace {

Eigen::Index position_of(const std::vector<BasisIndex>& support, BasisIndex idx) {
  const auto it = std::lower_bound(support.begin(), support.end(), idx);
  if (it == support.end() || *it != idx) return -1;
  return static_cast<Eigen::Index>(it - support.begin());
}

CMatrix embed(const DensityMatrix& rho, const std::vector<BasisIndex>& support) {
  const auto n = static_cast<Eigen::Index>(support.size());
  CMatrix out = CMatrix::Zero(n, n);
  std::vector<Eigen::Index> pos(rho.support.size());
  for (std::size_t i = 0; i < rho.support.size(); ++i) pos[i] = position_of(support, rho.support[i]);
  for (std::size_t i = 0; i < rho.support.size(); ++i) {
    for (std::size_t j = 0; j < rho.support.size(); ++j) {
      out(pos[i], pos[j]) = rho.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  return out;
}

Complex branch_overlap(const PhaseTaggedState::Branch& x, const PhaseTaggedState::Branch& y) {
  Complex total{};
  for (const auto& [b, block] : x) {
    const auto it = y.find(b);
    if (it != y.end()) total += block.dot(it->second);
  }
  return total;
}

double gram_sum(const PhaseTaggedState& s, const PhaseTaggedState& t) {
  double total = 0.0;
  for (const auto& [i, x] : s.branches()) {
    for (const auto& [j, y] : t.branches()) total += std::norm(branch_overlap(x, y));
  }
  return total;
}

}  // namespace

Complex DensityMatrix::at(BasisIndex row, BasisIndex col) const {
  const auto i = position_of(support, row);
  const auto j = position_of(support, col);
  if (i < 0 || j < 0) return {};
  return entries(i, j);
}

CMatrix DensityMatrix::dense() const {
  if (dim > kMaxDenseDim) throw std::length_error("density matrix too large to densify");
  std::vector<BasisIndex> full(dim);
  for (BasisIndex i = 0; i < dim; ++i) full[i] = i;
  return embed(*this, full);
}

double DensityMatrix::trace() const { return entries.trace().real(); }

void DensityMatrix::validate() const {
  if (entries.rows() == 0) throw std::logic_error("density matrix is empty");
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::logic_error("density matrix is not Hermitian");
  }
  if (std::abs(trace() - 1.0) > 1e-12) throw std::logic_error("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) throw std::logic_error("density matrix is not positive semidefinite");
}

DensityMatrix reduced_density(const PhaseTaggedState& state, RegisterSet keep) {
  if (keep.empty()) throw std::invalid_argument("reduced density needs at least one register");
  const RegisterLayout& layout = state.layout();
  const RegisterSet rest = keep.complement();
  const BasisIndex bd = layout.block_dim();
  const int shift = layout.nA() + layout.nV();

  // Per branch, group the amplitudes by the traced-out index; each group is
  // one vector whose outer product contributes to the marginal.
  using Sparse = std::vector<std::pair<BasisIndex, Complex>>;
  std::vector<std::map<BasisIndex, Sparse>> groups;
  std::set<BasisIndex> support_set;
  for (const auto& [tag, branch] : state.branches()) {
    auto& g = groups.emplace_back();
    for (const auto& [b, block] : branch) {
      for (BasisIndex j = 0; j < bd; ++j) {
        const Complex amp = block[static_cast<Eigen::Index>(j)];
        if (amp == Complex{}) continue;
        const BasisIndex full = (b << shift) | j;
        const BasisIndex k = layout.extract(keep, full);
        g[rest.empty() ? 0 : layout.extract(rest, full)].emplace_back(k, amp);
        support_set.insert(k);
      }
    }
  }
  if (support_set.size() > kMaxDenseDim) throw std::length_error("marginal support too large for a dense matrix");

  DensityMatrix rho;
  rho.dim = layout.dim(keep);
  rho.support.assign(support_set.begin(), support_set.end());
  const auto n = static_cast<Eigen::Index>(rho.support.size());
  rho.entries = CMatrix::Zero(n, n);
  for (const auto& g : groups) {
    for (const auto& [r, vec] : g) {
      for (const auto& [ki, ai] : vec) {
        const auto pi = position_of(rho.support, ki);
        for (const auto& [kj, aj] : vec) rho.entries(pi, position_of(rho.support, kj)) += ai * std::conj(aj);
      }
    }
  }
  return rho;
}

DensityMatrix density_of(const PhaseTaggedState& state) { return reduced_density(state, RegisterSet::all()); }

double von_neumann_entropy(const DensityMatrix& rho) {
  if (rho.entries.rows() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho.entries, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (const double lambda : solver.eigenvalues()) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double frobenius_distance(const DensityMatrix& lhs, const DensityMatrix& rhs) {
  if (lhs.dim != rhs.dim) throw std::invalid_argument("density matrices live in different spaces");
  std::vector<BasisIndex> support;
  std::set_union(lhs.support.begin(), lhs.support.end(), rhs.support.begin(), rhs.support.end(),
                 std::back_inserter(support));
  return (embed(lhs, support) - embed(rhs, support)).norm();
}

double density_distance(const PhaseTaggedState& lhs, const PhaseTaggedState& rhs) {
  if (!(lhs.layout() == rhs.layout())) throw std::invalid_argument("states have different register layouts");
  try {
    return frobenius_distance(density_of(lhs), density_of(rhs));
  } catch (const std::length_error&) {
    // Gram-matrix route: ||rho - sigma||^2 = tr rho^2 + tr sigma^2 - 2 tr rho sigma.
    const double d2 = gram_sum(lhs, lhs) + gram_sum(rhs, rhs) - 2.0 * gram_sum(lhs, rhs);
    return std::sqrt(std::max(d2, 0.0));
  }
}

double b_entropy(const PhaseTaggedState& state) { return von_neumann_entropy(reduced_density(state, Register::B)); }

int schmidt_rank(const PhaseTaggedState& state, PhaseTag tag, RegisterSet left, double tolerance) {
  const RegisterLayout& layout = state.layout();
  if (left.empty() || left == RegisterSet::all()) return 1;
  const RegisterSet right = left.complement();
  if (layout.dim(left) > kMaxDenseDim || layout.dim(right) > kMaxDenseDim) {
    throw std::length_error("Schmidt decomposition too large");
  }
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(layout.dim(left)), static_cast<Eigen::Index>(layout.dim(right)));
  const auto it = state.branches().find(tag);
  if (it == state.branches().end()) return 0;
  const BasisIndex bd = layout.block_dim();
  const int shift = layout.nA() + layout.nV();
  for (const auto& [b, block] : it->second) {
    for (BasisIndex j = 0; j < bd; ++j) {
      const BasisIndex full = (b << shift) | j;
      m(static_cast<Eigen::Index>(layout.extract(left, full)), static_cast<Eigen::Index>(layout.extract(right, full))) +=
          block[static_cast<Eigen::Index>(j)];
    }
  }
  Eigen::JacobiSVD<CMatrix> svd(m);
  int rank = 0;
  for (const double sv : svd.singularValues()) {
    if (sv > tolerance) ++rank;
  }
  return rank;
}

}  // namespace halfinfo
