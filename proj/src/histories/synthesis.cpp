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
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "halfinfo/histories.hpp"
#include "halfinfo/runner.hpp"

namespace halfinfo {

namespace {

constexpr int kEvaluationBudget = 20000;  // per restart
constexpr double kFinalStep = 1e-9;

double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (const double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double hermitian_entropy(const CMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
  std::vector<double> ev;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) ev.push_back(std::max(0.0, solver.eigenvalues()[i]));
  return entropy_bits(ev);
}

double mi_from_joint(const std::map<std::pair<int, BasisIndex>, double>& joint) {
  std::map<int, double> px;
  std::map<BasisIndex, double> py;
  for (const auto& [k, p] : joint) {
    px[k.first] += p;
    py[k.second] += p;
  }
  double mi = 0.0;
  for (const auto& [k, p] : joint) {
    if (p > 0.0) mi += p * std::log2(p / (px[k.first] * py[k.second]));
  }
  return std::max(0.0, mi);
}

// Post-oracle blocks as dA x dV matrices, one per table, for the search
// loop; the reported values go through the state-level functions.
struct Blocks {
  std::vector<CMatrix> m;
  std::vector<int> label;
};

Blocks post_oracle_blocks(const ProblemFamily& family, const PhaseTaggedState& state) {
  const RegisterLayout& layout = family.layout();
  const auto da = static_cast<Eigen::Index>(layout.dim(Register::A));
  const auto dv = static_cast<Eigen::Index>(layout.dim(Register::V));
  std::map<std::string, int> ids;
  Blocks blocks;
  for (const auto& [tag, branch] : state.branches()) {
    for (const auto& [b, block] : branch) {
      CMatrix m(da, dv);
      for (Eigen::Index a = 0; a < da; ++a) {
        for (Eigen::Index v = 0; v < dv; ++v) m(a, v) = block[a * dv + v];
      }
      blocks.m.push_back(std::move(m));
      const auto& label = family.solution(*family.find(b));
      blocks.label.push_back(ids.emplace(label, static_cast<int>(ids.size())).first->second);
    }
  }
  return blocks;
}

double fast_readable(const Blocks& blocks, const CMatrix& u) {
  std::map<std::pair<int, BasisIndex>, double> joint;
  for (std::size_t t = 0; t < blocks.m.size(); ++t) {
    const CMatrix out = u * blocks.m[t];
    for (Eigen::Index a = 0; a < out.rows(); ++a) {
      joint[{blocks.label[t], static_cast<BasisIndex>(a)}] += out.row(a).squaredNorm();
    }
  }
  return mi_from_joint(joint);
}

// Each table sits on its own B value, so the B(x)A density is block
// diagonal in B.
double fast_entanglement(const Blocks& blocks, const CMatrix& u) {
  const Eigen::Index da = u.rows();
  CMatrix rho_a = CMatrix::Zero(da, da);
  std::vector<double> pb;
  double s_ba = 0.0;
  for (const auto& m : blocks.m) {
    const CMatrix out = u * m;
    const CMatrix sigma = out * out.adjoint();
    rho_a += sigma;
    pb.push_back(sigma.trace().real());
    s_ba += hermitian_entropy(sigma);
  }
  return std::max(0.0, entropy_bits(pb) + hermitian_entropy(rho_a) - s_ba);
}

}  // namespace

std::string_view objective_name(SynthesisObjective objective) {
  return objective == SynthesisObjective::Entanglement ? "entanglement" : "readable_info";
}

double entanglement_objective(const PhaseTaggedState& state) {
  const double sb = von_neumann_entropy(reduced_density(state, Register::B));
  const double sa = von_neumann_entropy(reduced_density(state, Register::A));
  const double sba = von_neumann_entropy(reduced_density(state, Register::B | Register::A));
  return std::max(0.0, sb + sa - sba);
}

double readable_info_objective(const ProblemFamily& family, const PhaseTaggedState& state) {
  std::map<std::string, int> ids;
  std::map<std::pair<int, BasisIndex>, double> joint;
  for (const auto& [ba, p] : joint_distribution(state, Register::B, Register::A)) {
    const auto table = family.find(ba.first);
    if (!table) throw std::invalid_argument("state has a B value outside the family");
    const int id = ids.emplace(family.solution(*table), static_cast<int>(ids.size())).first->second;
    joint[{id, ba.second}] += p;
  }
  return mi_from_joint(joint);
}

int givens_parameter_count(int dim) { return dim * (dim - 1) + dim; }

CMatrix givens_unitary(int dim, const std::vector<double>& params) {
  if (static_cast<int>(params.size()) != givens_parameter_count(dim)) {
    throw std::invalid_argument("givens_unitary: wrong parameter count");
  }
  CMatrix u = CMatrix::Identity(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      const double theta = params[k++];
      const double phi = params[k++];
      const Complex e = std::polar(1.0, phi);
      CMatrix g = CMatrix::Identity(dim, dim);
      g(i, i) = std::cos(theta);
      g(j, j) = std::cos(theta);
      g(i, j) = -e * std::sin(theta);
      g(j, i) = std::conj(e) * std::sin(theta);
      u = g * u;
    }
  }
  for (int i = 0; i < dim; ++i) u.row(i) *= std::polar(1.0, params[k++]);
  return u;
}

SynthesisResult synthesize_UA(const ProblemFamily& family, SynthesisObjective objective, int restarts,
                              std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("synthesize_UA: restarts must be positive");
  const RegisterLayout& layout = family.layout();
  const int dim = static_cast<int>(layout.dim(Register::A));
  if (dim > 16) throw std::invalid_argument("synthesize_UA: A must have at most 4 qubits");
  const PhaseTaggedState evaluated = apply(prepare_initial(family), oracle_unitary(family));
  const Blocks blocks = post_oracle_blocks(family, evaluated);
  auto score = [&](const std::vector<double>& p) {
    const CMatrix u = givens_unitary(dim, p);
    return objective == SynthesisObjective::ReadableInfo ? fast_readable(blocks, u) : fast_entanglement(blocks, u);
  };

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const int count = givens_parameter_count(dim);
  SynthesisResult best;
  best.value = -1.0;
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> p(static_cast<std::size_t>(count));
    for (auto& x : p) x = angle(rng);
    double value = score(p);
    int evals = 1;
    double step = std::numbers::pi / 2.0;
    while (step > kFinalStep && evals < kEvaluationBudget) {
      bool improved = false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (const double dir : {1.0, -1.0}) {
          const double keep = p[i];
          p[i] = keep + dir * step;
          const double trial = score(p);
          ++evals;
          if (trial > value + 1e-15) {
            value = trial;
            improved = true;
            break;
          }
          p[i] = keep;
        }
      }
      if (!improved) step /= 2.0;
    }
    best.evaluations += evals;
    if (value > best.value) {
      best.value = value;
      best.restart = r;
      best.u_a = givens_unitary(dim, p);
    }
  }
  // Report through the state-level objective.
  const PhaseTaggedState final_state = apply_unitary(evaluated, best.u_a, Register::A);
  best.value = objective == SynthesisObjective::ReadableInfo ? readable_info_objective(family, final_state)
                                                             : entanglement_objective(final_state);
  return best;
}

ObjectiveComparison compare_objectives(const ProblemFamily& family, int restarts, std::uint64_t seed) {
  ObjectiveComparison cmp;
  cmp.entanglement = synthesize_UA(family, SynthesisObjective::Entanglement, restarts, seed);
  cmp.readable_info = synthesize_UA(family, SynthesisObjective::ReadableInfo, restarts, seed);
  const PhaseTaggedState evaluated = apply(prepare_initial(family), oracle_unitary(family));
  cmp.entanglement_at_readable_best =
      entanglement_objective(apply_unitary(evaluated, cmp.readable_info.u_a, Register::A));
  cmp.readable_at_entanglement_best =
      readable_info_objective(family, apply_unitary(evaluated, cmp.entanglement.u_a, Register::A));
  const bool readable_best_is_entangling = cmp.entanglement_at_readable_best >= cmp.entanglement.value - 1e-6;
  const bool entangling_best_is_readable = cmp.readable_at_entanglement_best >= cmp.readable_info.value - 1e-6;
  cmp.maximizers_differ = !readable_best_is_entangling && !entangling_best_is_readable;
  return cmp;
}

}  // namespace halfinfo
