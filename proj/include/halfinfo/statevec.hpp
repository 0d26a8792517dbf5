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

// Dense simulation of the three-register (B, A, V) system in the random-phase
// representation of mixed states.
//
// A PhaseTaggedState is an ensemble of amplitude vectors, one per phase tag.
// Tag k stands for an independent uniformly random phase factor, so the
// density operator is sum_k |v_k><v_k| with all cross terms averaged away.
// Each vector is stored block-sparse over register B: a map from B basis
// index to a dense block over A (x) V. Flattened indices put B in the most
// significant bits, then A, then V.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace halfinfo {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using BasisIndex = std::uint64_t;
using PhaseTag = int;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kUnitarityTolerance = 1e-12;
inline constexpr double kStateTolerance = 1e-10;
inline constexpr double kImpossibleProbability = 1e-12;
inline constexpr BasisIndex kMaxAmplitudes = BasisIndex{1} << 24;
// Largest dimension for which dense operators and density matrices are built.
inline constexpr BasisIndex kMaxDenseDim = BasisIndex{1} << 11;

enum class Register : unsigned { B = 1, A = 2, V = 4 };

class RegisterSet {
 public:
  constexpr RegisterSet() = default;
  constexpr RegisterSet(Register r) : mask_(static_cast<unsigned>(r)) {}  // NOLINT

  static constexpr RegisterSet all() { return RegisterSet(7u); }
  static constexpr RegisterSet none() { return RegisterSet(0u); }

  constexpr bool contains(Register r) const { return (mask_ & static_cast<unsigned>(r)) != 0; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool intersects(RegisterSet o) const { return (mask_ & o.mask_) != 0; }
  constexpr bool subset_of(RegisterSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr RegisterSet complement() const { return RegisterSet(~mask_ & 7u); }
  constexpr unsigned mask() const { return mask_; }

  friend constexpr RegisterSet operator|(RegisterSet a, RegisterSet b) {
    return RegisterSet(a.mask_ | b.mask_);
  }
  friend constexpr bool operator==(RegisterSet a, RegisterSet b) = default;

  std::string str() const;

 private:
  explicit constexpr RegisterSet(unsigned m) : mask_(m) {}
  unsigned mask_ = 0;
};

constexpr RegisterSet operator|(Register a, Register b) {
  return RegisterSet(a) | RegisterSet(b);
}

/// Qubit count of each register.
class RegisterLayout {
 public:
  /// Throws std::invalid_argument unless nB >= 1, nA >= 1, nV >= 0 and the
  /// flattened dimension is at most kMaxAmplitudes.
  RegisterLayout(int nB, int nA, int nV);

  int nB() const { return nB_; }
  int nA() const { return nA_; }
  int nV() const { return nV_; }
  int qubits(Register r) const;
  int qubits(RegisterSet s) const;

  BasisIndex dim() const { return BasisIndex{1} << (nB_ + nA_ + nV_); }
  BasisIndex dim(RegisterSet s) const { return BasisIndex{1} << qubits(s); }
  /// Dimension of one A (x) V block.
  BasisIndex block_dim() const { return BasisIndex{1} << (nA_ + nV_); }

  BasisIndex compose(BasisIndex b, BasisIndex a, BasisIndex v) const {
    return (b << (nA_ + nV_)) | (a << nV_) | v;
  }
  BasisIndex b_of(BasisIndex full) const { return full >> (nA_ + nV_); }
  BasisIndex a_of(BasisIndex full) const { return (full >> nV_) & ((BasisIndex{1} << nA_) - 1); }
  BasisIndex v_of(BasisIndex full) const { return full & ((BasisIndex{1} << nV_) - 1); }

  /// Index of `full` restricted to the registers of `s`, concatenated in
  /// B, A, V order.
  BasisIndex extract(RegisterSet s, BasisIndex full) const;
  /// Inverse of extract: combines a sub-index over `s` with a sub-index over
  /// the complement of `s`.
  BasisIndex join(RegisterSet s, BasisIndex sub, BasisIndex rest) const;

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

 private:
  int nB_;
  int nA_;
  int nV_;
};

/// Ensemble of phase-tagged amplitude vectors.
class PhaseTaggedState {
 public:
  /// B basis index -> dense block over A (x) V.
  using Branch = std::map<BasisIndex, CVector>;
  using Branches = std::map<PhaseTag, Branch>;

  /// Checks block sizes and B indices, and that the total norm is 1 within
  /// kNormTolerance. Throws std::invalid_argument on violation.
  PhaseTaggedState(RegisterLayout layout, Branches branches);

  static PhaseTaggedState from_dense(RegisterLayout layout, const std::map<PhaseTag, CVector>& dense);

  const RegisterLayout& layout() const { return layout_; }
  const Branches& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  std::vector<PhaseTag> tags() const;

  double norm_squared() const;
  BasisIndex stored_amplitudes() const;
  Complex amplitude(PhaseTag tag, BasisIndex full) const;
  /// Full-length vector of one branch; requires dim() <= kMaxAmplitudes.
  CVector dense(PhaseTag tag) const;

  /// Skips validation. Used by operations whose output is normalized by
  /// construction.
  static PhaseTaggedState unchecked(RegisterLayout layout, Branches branches);

 private:
  struct NoCheck {};
  PhaseTaggedState(NoCheck, RegisterLayout layout, Branches branches);

  RegisterLayout layout_;
  Branches branches_;
};

/// Unitary built from a sequence of steps; applied first step first.
class Operator {
 public:
  using IndexMap = std::function<BasisIndex(BasisIndex)>;

  Operator() = default;

  /// Dense unitary acting on the registers of `target` (identity elsewhere).
  /// Throws std::invalid_argument if `u` is not unitary within
  /// kUnitarityTolerance or its size does not match the target.
  static Operator local(const RegisterLayout& layout, CMatrix u, RegisterSet target, std::string label);
  /// Basis permutation on the full space. `inverse` must undo `forward`.
  static Operator permutation(IndexMap forward, IndexMap inverse, std::string label);
  /// 2|u><u| - I on `target`, with `axis` normalized.
  static Operator reflection(const RegisterLayout& layout, CVector axis, RegisterSet target, std::string label);

  /// This operator followed by `next`.
  Operator then(const Operator& next) const;
  Operator adjoint() const;

  bool is_identity() const { return steps_.empty(); }
  std::string label() const;

  void apply(const RegisterLayout& layout, PhaseTaggedState::Branch& branch) const;
  /// Dense matrix on the full space; requires dim() <= kMaxDenseDim.
  CMatrix matrix(const RegisterLayout& layout) const;

 private:
  struct LocalStep {
    CMatrix u;
    RegisterSet target;
  };
  struct PermutationStep {
    IndexMap forward;
    IndexMap inverse;
  };
  struct ReflectionStep {
    CVector axis;
    RegisterSet target;
  };
  struct Step {
    std::variant<LocalStep, PermutationStep, ReflectionStep> kind;
    std::string label;
  };

  static Step adjoint_of(const Step& step);
  static void apply_step(const Step& step, const RegisterLayout& layout, PhaseTaggedState::Branch& branch);

  std::vector<Step> steps_;
};

/// Orthogonal projector, possibly conjugated by an operator (U^dagger P U).
class Projector {
 public:
  static Projector identity(std::string description = "identity");
  /// Onto the span of the listed basis states of the registers in `target`.
  static Projector onto_basis(RegisterSet target, std::vector<BasisIndex> indices, std::string description);
  /// Onto the span of the orthonormal columns of `vectors`, on `target`.
  static Projector onto_vectors(const RegisterLayout& layout, RegisterSet target, CMatrix vectors,
                                std::string description);

  const std::string& description() const { return description_; }
  Projector complement(std::string description) const;
  /// U^dagger P U.
  Projector conjugated(const Operator& u) const;

  void apply(const RegisterLayout& layout, PhaseTaggedState::Branch& branch) const;
  CMatrix matrix(const RegisterLayout& layout) const;

 private:
  enum class Kind { Identity, Basis, Vectors };
  Projector() = default;
  void apply_core(const RegisterLayout& layout, PhaseTaggedState::Branch& branch) const;

  Kind kind_ = Kind::Identity;
  RegisterSet target_;
  std::vector<BasisIndex> indices_;  // sorted
  CMatrix vectors_;
  bool complement_ = false;
  Operator conjugation_;
  std::string description_;
};

/// Two complementary projectors on one register; outcome 0 or 1.
struct BinaryObservable {
  std::string label;
  Projector zero;
  Projector one;
};

/// Outcome 0 iff the given qubit of `reg` reads 0 (qubit 0 is the most
/// significant, i.e. the leftmost character of the ket).
BinaryObservable qubit_observable(const RegisterLayout& layout, Register reg, int qubit, std::string label);
/// Outcome 0 iff the bits of `reg` have even parity ({00, 11} for two qubits).
BinaryObservable parity_observable(const RegisterLayout& layout, Register reg, std::string label);

/// Density operator stored on the span of the basis states it is supported
/// on. `dim` is the dimension of the register space it lives in.
struct DensityMatrix {
  BasisIndex dim = 0;
  std::vector<BasisIndex> support;  // ascending
  CMatrix entries;

  Complex at(BasisIndex row, BasisIndex col) const;
  CMatrix dense() const;
  double trace() const;
  /// Throws std::logic_error unless Hermitian (1e-12), unit trace (1e-12)
  /// and positive semidefinite (eigenvalues >= -1e-10).
  void validate() const;
};

DensityMatrix density_of(const PhaseTaggedState& state);
DensityMatrix reduced_density(const PhaseTaggedState& state, RegisterSet keep);
double von_neumann_entropy(const DensityMatrix& rho);
double frobenius_distance(const DensityMatrix& lhs, const DensityMatrix& rhs);
/// Frobenius distance of the density operators of two states.
double density_distance(const PhaseTaggedState& lhs, const PhaseTaggedState& rhs);
/// B-marginal entropy in bits.
double b_entropy(const PhaseTaggedState& state);

PhaseTaggedState apply_unitary(const PhaseTaggedState& state, const CMatrix& u, RegisterSet target);
PhaseTaggedState apply(const PhaseTaggedState& state, const Operator& op);

struct Projection {
  PhaseTaggedState state;
  double probability;
};

/// Projects every branch and renormalizes, dropping branches that vanish. Throws
/// std::domain_error ("impossible outcome") when probability < 1e-12.
Projection project(const PhaseTaggedState& state, const Projector& p);
double outcome_probability(const PhaseTaggedState& state, const Projector& p);

struct Measurement {
  BasisIndex outcome;
  double probability;
  PhaseTaggedState state;
};

Measurement measure(const PhaseTaggedState& state, const BinaryObservable& obs, std::uint64_t seed);
/// Computational-basis measurement of the registers in `registers`.
Measurement measure(const PhaseTaggedState& state, RegisterSet registers, std::uint64_t seed);

std::map<BasisIndex, double> born_distribution(const PhaseTaggedState& state, RegisterSet registers);
using JointDistribution = std::map<std::pair<BasisIndex, BasisIndex>, double>;
JointDistribution joint_distribution(const PhaseTaggedState& state, RegisterSet x, RegisterSet y);
double mutual_information(const JointDistribution& joint);
/// Classical mutual information of computational-basis measurements of two
/// disjoint register sets.
double mutual_information(const PhaseTaggedState& state, RegisterSet x, RegisterSet y);

Projector back_evolve_projector(const Projector& p, const Operator& u_total);

/// Schmidt rank of one branch across the cut `left` | rest.
int schmidt_rank(const PhaseTaggedState& state, PhaseTag tag, RegisterSet left, double tolerance = 1e-10);

/// Largest |(U^dagger U - I)_ij|.
double unitarity_defect(const CMatrix& u);
CMatrix hadamard(int qubits);

}  // namespace halfinfo
