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

// Catalog of the oracle problem families: function tables, the oracle that
// XORs f_b(a) into register V, and preparation of the relativized initial
// state in which register B is an incoherent mixture over the tables.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "halfinfo/bits.hpp"
#include "halfinfo/statevec.hpp"

namespace halfinfo {

enum class FamilyKind { Grover, DeutschJozsa, Simon, Permutation, Custom };

/// Which half tables count as advanced information without disclosing the
/// solution.
enum class Goodness {
  NoMarkedRow,     // no row with value 1 (search)
  UniformValues,   // all listed values equal (Deutsch-Jozsa)
  DistinctValues,  // no value listed twice (Simon)
  Any,
};

/// Preparation of register V: |-> on every qubit, or all zeroes.
enum class VInit { Minus, Zero };

std::string_view kind_name(FamilyKind kind);
std::string_view goodness_name(Goodness g);
Goodness parse_goodness(std::string_view name);
std::string_view v_init_name(VInit v);
VInit parse_v_init(std::string_view name);

struct FunctionTable {
  BitString index;                   // the suffix b; also the B basis state
  std::vector<std::uint64_t> rows;   // rows[a] = f_b(a)
};

/// Immutable, cheaply copyable catalog of function tables sharing one
/// register layout.
class ProblemFamily {
 public:
  /// Validates row coverage, value range, distinct indices, one solution per
  /// table and weights (positive, squares summing to 1 within 1e-12). Empty
  /// weights mean uniform. Throws std::invalid_argument.
  ProblemFamily(FamilyKind kind, std::string name, int n, int value_bits, int index_width,
                std::vector<FunctionTable> tables, std::vector<std::string> solutions, Goodness goodness,
                VInit v_init, std::vector<double> weights = {});

  FamilyKind kind() const { return data_->kind; }
  const std::string& name() const { return data_->name; }
  /// "grover(2)", "dj(3)", "perm", or the custom name.
  std::string label() const;
  int n() const { return data_->n; }
  int value_bits() const { return data_->value_bits; }
  const RegisterLayout& layout() const { return data_->layout; }
  Goodness goodness() const { return data_->goodness; }
  VInit v_init() const { return data_->v_init; }

  std::size_t size() const { return data_->tables.size(); }
  std::size_t arguments() const { return std::size_t{1} << data_->n; }
  const std::vector<FunctionTable>& tables() const { return data_->tables; }
  const FunctionTable& table(std::size_t i) const { return data_->tables.at(i); }
  std::uint64_t value(std::size_t table, std::uint64_t a) const { return data_->tables[table].rows[a]; }
  const std::vector<double>& weights() const { return data_->weights; }
  const std::vector<std::string>& solutions() const { return data_->solutions; }
  const std::string& solution(std::size_t table) const { return data_->solutions.at(table); }

  std::optional<std::size_t> find(BasisIndex b) const;
  /// Throws std::invalid_argument for an unknown suffix.
  std::size_t index_of(const BitString& b) const;

 private:
  struct Data {
    FamilyKind kind;
    std::string name;
    int n;
    int value_bits;
    RegisterLayout layout;
    std::vector<FunctionTable> tables;
    std::vector<std::string> solutions;
    Goodness goodness;
    VInit v_init;
    std::vector<double> weights;
    std::map<BasisIndex, std::size_t> lookup;
  };
  std::shared_ptr<const Data> data_;
};

/// Supported: grover 1 <= n <= 11 (n = 12 exceeds the amplitude budget),
/// dj n in {2, 3}, simon n in {2, 3}, perm (n is ignored, always 2).
/// Throws std::invalid_argument for unsupported combinations.
ProblemFamily build_family(FamilyKind kind, int n, std::vector<double> weights = {});
ProblemFamily build_family(std::string_view name, int n, std::vector<double> weights = {});
FamilyKind parse_family_kind(std::string_view name);

/// |b>|a>|v> -> |b>|a>|v XOR f_b(a)>; identity on B states that are not in
/// the family.
Operator oracle_unitary(const ProblemFamily& family);

CVector v_register_state(int nV, VInit v_init);

/// B incoherently mixed over the tables with the family weights (one phase
/// tag per table, tag = table position), A in the uniform superposition and
/// V as requested. Throws std::invalid_argument if `v_init` does not suit
/// the family.
PhaseTaggedState prepare_initial(const ProblemFamily& family, VInit v_init);
PhaseTaggedState prepare_initial(const ProblemFamily& family);
/// The same preparation with B sharp on one table.
PhaseTaggedState prepare_sharp(const ProblemFamily& family, std::size_t table, VInit v_init);

/// Per table: distribution of A after one oracle call followed by the
/// Hadamard transform on A, starting from the family's V preparation.
std::vector<std::map<BasisIndex, double>> single_query_outcomes(const ProblemFamily& family);

/// Permutation family only. Groups the tables by the A basis state
/// (01 -> 1, 10 -> 2, 11 -> 3) they end up correlated with. Throws
/// std::logic_error if the grouping is not three classes of eight or if A
/// can read 00.
std::vector<int> partition_of(const ProblemFamily& family);

/// Period h of a Simon table (nonzero h with f(a) = f(a XOR h) for all a).
std::optional<std::uint64_t> simon_period(const FunctionTable& table, int n);

/// Basis of {h : s.h = 0 mod 2 for all s}. Throws std::invalid_argument on
/// an empty list or mixed widths.
std::vector<BitString> gf2_solve(const std::vector<BitString>& strings);
int gf2_rank(const std::vector<BitString>& strings);

}  // namespace halfinfo
