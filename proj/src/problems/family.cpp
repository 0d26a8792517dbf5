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
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "halfinfo/problems.hpp"

namespace halfinfo {

namespace {

// Fixed seed for the sampled simon(3) catalog.
constexpr std::uint64_t kSimonSampleSeed = 1994;
constexpr std::size_t kSimonSampleSize = 64;

FunctionTable table_from_rows(std::vector<std::uint64_t> rows, int value_bits) {
  std::uint64_t bits = 0;
  for (const auto v : rows) bits = (bits << value_bits) | v;
  return {{bits, static_cast<int>(rows.size()) * value_bits}, std::move(rows)};
}

// Canonical tables (first value 0) in ascending order, each followed by its
// bitwise complement.
std::vector<FunctionTable> dual_ordered(std::vector<FunctionTable> tables) {
  std::vector<FunctionTable> canonical;
  std::map<std::uint64_t, FunctionTable> by_bits;
  for (auto& t : tables) {
    if (t.rows.front() == 0) canonical.push_back(t);
    by_bits.emplace(t.index.bits, std::move(t));
  }
  std::sort(canonical.begin(), canonical.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
  std::vector<FunctionTable> out;
  for (const auto& c : canonical) {
    out.push_back(c);
    const auto it = by_bits.find(c.index.complement().bits);
    if (it != by_bits.end()) out.push_back(it->second);
  }
  return out;
}

ProblemFamily grover(int n) {
  if (n < 1 || n > 11) {
    throw std::invalid_argument("grover(" + std::to_string(n) + ") unsupported: n must be in [1, 11]");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<FunctionTable> tables;
  std::vector<std::string> solutions;
  tables.reserve(count);
  for (std::uint64_t b = 0; b < count; ++b) {
    std::vector<std::uint64_t> rows(count, 0);
    rows[b] = 1;
    tables.push_back({{b, n}, std::move(rows)});
    solutions.push_back(to_bits(b, n));
  }
  return {FamilyKind::Grover, "grover", n, 1, n, std::move(tables), std::move(solutions), Goodness::NoMarkedRow,
          VInit::Minus};
}

ProblemFamily deutsch_jozsa(int n, std::vector<double> weights) {
  if (n != 2 && n != 3) throw std::invalid_argument("dj(" + std::to_string(n) + ") unsupported: n must be 2 or 3");
  const int rows = 1 << n;
  std::vector<FunctionTable> tables;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << rows); ++b) {
    const int ones = std::popcount(b);
    if (ones != 0 && ones != rows && ones != rows / 2) continue;
    std::vector<std::uint64_t> values(static_cast<std::size_t>(rows));
    for (int a = 0; a < rows; ++a) values[static_cast<std::size_t>(a)] = (b >> (rows - 1 - a)) & 1u;
    tables.push_back(table_from_rows(std::move(values), 1));
  }
  tables = dual_ordered(std::move(tables));
  std::vector<std::string> solutions;
  for (const auto& t : tables) {
    const auto ones = std::count(t.rows.begin(), t.rows.end(), 1u);
    solutions.emplace_back(ones == 0 || ones == rows ? "constant" : "balanced");
  }
  return {FamilyKind::DeutschJozsa, "dj", n, 1, rows, std::move(tables), std::move(solutions),
          Goodness::UniformValues, VInit::Minus, std::move(weights)};
}

ProblemFamily simon(int n, std::vector<double> weights) {
  if (n != 2 && n != 3) throw std::invalid_argument("simon(" + std::to_string(n) + ") unsupported: n must be 2 or 3");
  const std::uint64_t args = std::uint64_t{1} << n;
  const int value_bits = n - 1;
  std::vector<FunctionTable> tables;
  for (std::uint64_t h = 1; h < args; ++h) {
    std::vector<std::uint64_t> reps;
    for (std::uint64_t x = 0; x < args; ++x) {
      if (x < (x ^ h)) reps.push_back(x);
    }
    std::vector<std::uint64_t> values(reps.size());
    std::iota(values.begin(), values.end(), 0);
    do {
      std::vector<std::uint64_t> rows(args);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        rows[reps[i]] = values[i];
        rows[reps[i] ^ h] = values[i];
      }
      tables.push_back(table_from_rows(std::move(rows), value_bits));
    } while (std::next_permutation(values.begin(), values.end()));
  }
  if (n == 2) {
    tables = dual_ordered(std::move(tables));
  } else {
    std::mt19937_64 rng(kSimonSampleSeed);
    std::shuffle(tables.begin(), tables.end(), rng);
    tables.resize(std::min(tables.size(), kSimonSampleSize));
    std::sort(tables.begin(), tables.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
  }
  std::vector<std::string> solutions;
  for (const auto& t : tables) solutions.push_back(to_bits(*simon_period(t, n), n));
  const int width = static_cast<int>(args) * value_bits;
  return {FamilyKind::Simon, "simon", n, value_bits, width, std::move(tables), std::move(solutions),
          Goodness::DistinctValues, VInit::Zero, std::move(weights)};
}

ProblemFamily permutation(std::vector<double> weights) {
  std::vector<std::uint64_t> values = {0, 1, 2, 3};
  std::vector<FunctionTable> tables;
  do {
    tables.push_back(table_from_rows(values, 2));
  } while (std::next_permutation(values.begin(), values.end()));
  std::vector<std::string> placeholder(tables.size(), "?");
  ProblemFamily draft(FamilyKind::Permutation, "perm", 2, 2, 8, tables, placeholder, Goodness::Any, VInit::Minus,
                      weights);
  const auto classes = partition_of(draft);
  std::vector<std::string> solutions;
  for (const int c : classes) solutions.push_back(std::to_string(c));
  return {FamilyKind::Permutation, "perm", 2, 2, 8, std::move(tables), std::move(solutions), Goodness::Any,
          VInit::Minus, std::move(weights)};
}

}  // namespace

std::string_view kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Grover:
      return "grover";
    case FamilyKind::DeutschJozsa:
      return "dj";
    case FamilyKind::Simon:
      return "simon";
    case FamilyKind::Permutation:
      return "perm";
    case FamilyKind::Custom:
      return "custom";
  }
  return "custom";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "grover") return FamilyKind::Grover;
  if (name == "dj") return FamilyKind::DeutschJozsa;
  if (name == "simon") return FamilyKind::Simon;
  if (name == "perm") return FamilyKind::Permutation;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view goodness_name(Goodness g) {
  switch (g) {
    case Goodness::NoMarkedRow:
      return "grover";
    case Goodness::UniformValues:
      return "dj";
    case Goodness::DistinctValues:
      return "simon";
    case Goodness::Any:
      return "any";
  }
  return "any";
}

Goodness parse_goodness(std::string_view name) {
  if (name == "grover") return Goodness::NoMarkedRow;
  if (name == "dj") return Goodness::UniformValues;
  if (name == "simon") return Goodness::DistinctValues;
  if (name == "any") return Goodness::Any;
  throw std::invalid_argument("unknown goodness predicate '" + std::string(name) + "'");
}

std::string_view v_init_name(VInit v) { return v == VInit::Minus ? "minus" : "zero"; }

VInit parse_v_init(std::string_view name) {
  if (name == "minus") return VInit::Minus;
  if (name == "zero") return VInit::Zero;
  throw std::invalid_argument("unknown V preparation '" + std::string(name) + "'");
}

ProblemFamily::ProblemFamily(FamilyKind kind, std::string name, int n, int value_bits, int index_width,
                             std::vector<FunctionTable> tables, std::vector<std::string> solutions,
                             Goodness goodness, VInit v_init, std::vector<double> weights) {
  if (tables.empty()) throw std::invalid_argument("family has no tables");
  if (n < 1 || n > 20) throw std::invalid_argument("argument width must be in [1, 20]");
  if (value_bits < 1 || value_bits > 20) throw std::invalid_argument("value width must be in [1, 20]");
  if (index_width < 1 || index_width > 63) throw std::invalid_argument("table index width must be in [1, 63]");
  if (solutions.size() != tables.size()) throw std::invalid_argument("solution map does not cover every table");
  RegisterLayout layout(index_width, n, value_bits);

  const std::size_t args = std::size_t{1} << n;
  std::map<BasisIndex, std::size_t> lookup;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& t = tables[i];
    if (t.index.width != index_width) {
      throw std::invalid_argument("table " + t.index.str() + " has index width " + std::to_string(t.index.width) +
                                  ", expected " + std::to_string(index_width));
    }
    if (t.rows.size() != args) {
      throw std::invalid_argument("table " + t.index.str() + " does not cover all " + std::to_string(args) +
                                  " arguments exactly once");
    }
    for (const auto v : t.rows) {
      if (v >> value_bits) throw std::invalid_argument("table " + t.index.str() + " has a value wider than V");
    }
    if (!lookup.emplace(t.index.bits, i).second) {
      throw std::invalid_argument("duplicate table index " + t.index.str());
    }
    if (solutions[i].empty()) throw std::invalid_argument("empty solution label for table " + t.index.str());
  }

  if (weights.empty()) {
    weights.assign(tables.size(), 1.0 / std::sqrt(static_cast<double>(tables.size())));
  } else {
    if (weights.size() != tables.size()) throw std::invalid_argument("one weight per table required");
    double total = 0.0;
    for (const double w : weights) {
      if (!(w > 0.0)) throw std::invalid_argument("weights must be positive");
      total += w * w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("weights not normalized (sum of squares != 1)");
  }

  data_ = std::make_shared<const Data>(Data{kind, std::move(name), n, value_bits, layout, std::move(tables),
                                            std::move(solutions), goodness, v_init, std::move(weights),
                                            std::move(lookup)});
}

std::string ProblemFamily::label() const {
  switch (kind()) {
    case FamilyKind::Grover:
    case FamilyKind::DeutschJozsa:
    case FamilyKind::Simon:
      return name() + "(" + std::to_string(n()) + ")";
    default:
      return name();
  }
}

std::optional<std::size_t> ProblemFamily::find(BasisIndex b) const {
  const auto it = data_->lookup.find(b);
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t ProblemFamily::index_of(const BitString& b) const {
  const auto found = b.width == layout().nB() ? find(b.bits) : std::nullopt;
  if (!found) throw std::invalid_argument("no table " + b.str() + " in family " + label());
  return *found;
}

ProblemFamily build_family(FamilyKind kind, int n, std::vector<double> weights) {
  switch (kind) {
    case FamilyKind::Grover: {
      auto f = grover(n);
      if (weights.empty()) return f;
      return {FamilyKind::Grover, "grover", n, 1, n, f.tables(), f.solutions(), Goodness::NoMarkedRow,
              VInit::Minus, std::move(weights)};
    }
    case FamilyKind::DeutschJozsa:
      return deutsch_jozsa(n, std::move(weights));
    case FamilyKind::Simon:
      return simon(n, std::move(weights));
    case FamilyKind::Permutation:
      return permutation(std::move(weights));
    case FamilyKind::Custom:
      break;
  }
  throw std::invalid_argument("custom families are built from JSON");
}

ProblemFamily build_family(std::string_view name, int n, std::vector<double> weights) {
  return build_family(parse_family_kind(name), n, std::move(weights));
}

Operator oracle_unitary(const ProblemFamily& family) {
  const RegisterLayout layout = family.layout();
  auto map = [family, layout](BasisIndex full) {
    const auto table = family.find(layout.b_of(full));
    if (!table) return full;
    const BasisIndex a = layout.a_of(full);
    return layout.compose(layout.b_of(full), a, layout.v_of(full) ^ family.value(*table, a));
  };
  return Operator::permutation(map, map, "oracle[" + family.label() + "]");
}

CVector v_register_state(int nV, VInit v_init) {
  const auto dim = Eigen::Index{1} << nV;
  CVector v = CVector::Zero(dim);
  if (v_init == VInit::Zero) {
    v[0] = 1.0;
    return v;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = (std::popcount(static_cast<std::uint64_t>(i)) % 2 ? -amp : amp);
  return v;
}

namespace {

void check_v_init(const ProblemFamily& family, VInit v_init) {
  const bool ok = [&] {
    switch (family.kind()) {
      case FamilyKind::Grover:
      case FamilyKind::DeutschJozsa:
      case FamilyKind::Permutation:
        return v_init == VInit::Minus;
      case FamilyKind::Simon:
        return v_init == VInit::Zero;
      case FamilyKind::Custom:
        return true;
    }
    return false;
  }();
  if (!ok) {
    throw std::invalid_argument("V preparation '" + std::string(v_init_name(v_init)) + "' does not suit family " +
                                family.label());
  }
}

CVector uniform_block(const ProblemFamily& family, VInit v_init) {
  const RegisterLayout& layout = family.layout();
  const CVector v = v_register_state(layout.nV(), v_init);
  const auto adim = static_cast<Eigen::Index>(layout.dim(Register::A));
  CVector block(adim * v.size());
  const double amp = 1.0 / std::sqrt(static_cast<double>(adim));
  for (Eigen::Index a = 0; a < adim; ++a) block.segment(a * v.size(), v.size()) = amp * v;
  return block;
}

}  // namespace

PhaseTaggedState prepare_initial(const ProblemFamily& family, VInit v_init) {
  check_v_init(family, v_init);
  const CVector block = uniform_block(family, v_init);
  PhaseTaggedState::Branches branches;
  for (std::size_t i = 0; i < family.size(); ++i) {
    PhaseTaggedState::Branch branch;
    branch.emplace(family.table(i).index.bits, family.weights()[i] * block);
    branches.emplace(static_cast<PhaseTag>(i), std::move(branch));
  }
  return {family.layout(), std::move(branches)};
}

PhaseTaggedState prepare_initial(const ProblemFamily& family) { return prepare_initial(family, family.v_init()); }

PhaseTaggedState prepare_sharp(const ProblemFamily& family, std::size_t table, VInit v_init) {
  check_v_init(family, v_init);
  PhaseTaggedState::Branch branch;
  branch.emplace(family.table(table).index.bits, uniform_block(family, v_init));
  PhaseTaggedState::Branches branches;
  branches.emplace(static_cast<PhaseTag>(table), std::move(branch));
  return {family.layout(), std::move(branches)};
}

std::vector<std::map<BasisIndex, double>> single_query_outcomes(const ProblemFamily& family) {
  const Operator flow =
      oracle_unitary(family).then(Operator::local(family.layout(), hadamard(family.n()), Register::A, "H_A"));
  std::vector<std::map<BasisIndex, double>> out;
  out.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto state = apply(prepare_sharp(family, i, family.v_init()), flow);
    auto dist = born_distribution(state, Register::A);
    std::erase_if(dist, [](const auto& kv) { return kv.second < kImpossibleProbability; });
    out.push_back(std::move(dist));
  }
  return out;
}

std::vector<int> partition_of(const ProblemFamily& family) {
  if (family.kind() != FamilyKind::Permutation) throw std::invalid_argument("partition_of needs the perm family");
  const auto outcomes = single_query_outcomes(family);
  std::vector<int> classes;
  std::map<int, int> sizes;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& dist = outcomes[i];
    if (dist.count(0)) {
      throw std::logic_error("A reads 00 with probability " + std::to_string(dist.at(0)) + " for table " +
                             family.table(i).index.str());
    }
    if (dist.size() != 1 || std::abs(dist.begin()->second - 1.0) > 1e-12) {
      throw std::logic_error("table " + family.table(i).index.str() + " is not correlated with a single A state");
    }
    const int c = static_cast<int>(dist.begin()->first);
    classes.push_back(c);
    ++sizes[c];
  }
  if (sizes.size() != 3 || sizes[1] != 8 || sizes[2] != 8 || sizes[3] != 8) {
    throw std::logic_error("perm tables do not split into three classes of eight");
  }
  return classes;
}

std::optional<std::uint64_t> simon_period(const FunctionTable& table, int n) {
  const std::uint64_t args = std::uint64_t{1} << n;
  for (std::uint64_t h = 1; h < args; ++h) {
    bool periodic = true;
    for (std::uint64_t a = 0; a < args && periodic; ++a) periodic = table.rows[a] == table.rows[a ^ h];
    if (periodic) return h;
  }
  return std::nullopt;
}

}  // namespace halfinfo
