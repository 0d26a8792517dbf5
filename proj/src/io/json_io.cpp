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

#include "halfinfo/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace halfinfo {

namespace {

Json pair_of(Complex z) { return Json::array({z.real(), z.imag()}); }

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("family JSON: " + what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.contains(key)) bad(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::string text(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

int integer(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace

Json state_to_json(const PhaseTaggedState& state) {
  const RegisterLayout& layout = state.layout();
  Json branches = Json::array();
  for (const auto& [tag, branch] : state.branches()) {
    Json blocks = Json::array();
    for (const auto& [b, block] : branch) {
      Json amps = Json::array();
      for (Eigen::Index i = 0; i < block.size(); ++i) amps.push_back(pair_of(block[i]));
      blocks.push_back({{"b", to_bits(b, layout.nB())}, {"amplitudes", std::move(amps)}});
    }
    branches.push_back({{"tag", tag}, {"blocks", std::move(blocks)}});
  }
  return {{"schema", kSchemaVersion},
          {"layout", {{"nB", layout.nB()}, {"nA", layout.nA()}, {"nV", layout.nV()}}},
          {"branches", std::move(branches)}};
}

Json trace_to_json(const AlgorithmTrace& trace, const ProblemFamily& family) {
  const RegisterLayout& layout = family.layout();
  auto stages = [](const std::vector<TraceStage>& list) {
    Json out = Json::array();
    for (const auto& s : list) {
      Json entry = {{"stage", stage_label(s.stage)}, {"b_entropy", b_entropy(s.state)}};
      if (!s.note.empty()) entry["note"] = s.note;
      out.push_back(std::move(entry));
    }
    return out;
  };
  return {{"schema", kSchemaVersion},
          {"family", trace.family},
          {"order", order_name(trace.order)},
          {"stages", stages(trace.stages)},
          {"relative", stages(trace.relative)},
          {"outcomes",
           {{"bob_selection", to_bits(trace.bob_selection, layout.nB())},
            {"bob", to_bits(trace.bob_outcome, layout.nB())},
            {"alice", to_bits(trace.alice_outcome, layout.nA())}}},
          {"evaluations", trace.evaluations},
          {"solution", trace.solution},
          {"answer", trace.answer},
          {"success", trace.success},
          {"success_probability", trace.success_probability}};
}

Json query_report_to_json(const QueryReport& report, const ProblemFamily& family) {
  Json breakdown = Json::array();
  for (const auto& entry : report.breakdown) {
    breakdown.push_back({{"b", family.table(entry.table).index.str()},
                         {"half_table", describe(family, entry.half)},
                         {"count", entry.count}});
  }
  return {{"schema", kSchemaVersion},
          {"family", report.family},
          {"quantum", report.quantum},
          {"quantum_exact", report.quantum_exact},
          {"classical", report.classical},
          {"classical_with_info", report.classical_with_info},
          {"rule_holds", report.rule_holds},
          {"degenerate", report.degenerate},
          {"breakdown", std::move(breakdown)}};
}

std::string query_report_to_markdown(const QueryReport& report) {
  std::ostringstream out;
  out << "| family | quantum | classical | classical+50% | rule holds |\n";
  out << "|---|---|---|---|---|\n";
  out << "| " << report.family << " | " << report.quantum << " | " << report.classical << " | "
      << report.classical_with_info << " | " << (report.rule_holds ? "yes" : "no") << " |\n";
  return out.str();
}

Json family_to_json(const ProblemFamily& family) {
  Json tables = Json::array();
  Json solutions = Json::object();
  for (std::size_t t = 0; t < family.size(); ++t) {
    const auto& table = family.table(t);
    Json rows = Json::array();
    for (const auto v : table.rows) rows.push_back(to_bits(v, family.value_bits()));
    tables.push_back({{"b", table.index.str()}, {"rows", std::move(rows)}});
    solutions[table.index.str()] = family.solution(t);
  }
  Json doc = {{"schema", kSchemaVersion},
              {"name", family.name()},
              {"n", family.n()},
              {"value_bits", family.value_bits()},
              {"goodness", goodness_name(family.goodness())},
              {"v_init", v_init_name(family.v_init())},
              {"tables", std::move(tables)},
              {"solutions", std::move(solutions)}};
  // Uniform weights are the default and are left out.
  const auto& w = family.weights();
  const bool uniform = std::all_of(w.begin(), w.end(), [&](double x) { return x == w.front(); });
  if (!uniform) doc["weights"] = w;
  return doc;
}

ProblemFamily family_from_json(const Json& doc) {
  if (!doc.is_object()) bad("top level must be an object");
  if (integer(doc, "schema") != kSchemaVersion) bad("unsupported schema version");
  const std::string name = text(doc, "name");
  const int n = integer(doc, "n");
  const int value_bits = integer(doc, "value_bits");
  if (n < 1 || n > 20) bad("n must be in [1, 20]");
  if (value_bits < 1 || value_bits > 20) bad("value_bits must be in [1, 20]");
  Goodness goodness;
  VInit v_init;
  try {
    goodness = parse_goodness(text(doc, "goodness"));
    v_init = parse_v_init(text(doc, "v_init"));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }

  const Json& tables_doc = field(doc, "tables");
  if (!tables_doc.is_array() || tables_doc.empty()) bad("'tables' must be a non-empty array");
  std::vector<FunctionTable> tables;
  int width = -1;
  for (const Json& entry : tables_doc) {
    if (!entry.is_object()) bad("each table must be an object");
    BitString index;
    std::vector<std::uint64_t> rows;
    try {
      index = BitString::parse(text(entry, "b"));
      const Json& rows_doc = field(entry, "rows");
      if (!rows_doc.is_array()) bad("'rows' must be an array");
      for (const Json& r : rows_doc) {
        if (!r.is_string()) bad("row values must be bit strings");
        const BitString value = BitString::parse(r.get<std::string>());
        if (value.width != value_bits) bad("row value '" + value.str() + "' is not " + std::to_string(value_bits) + " bits wide");
        rows.push_back(value.bits);
      }
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      if (what.rfind("family JSON", 0) == 0) throw;
      bad(what);
    }
    if (width < 0) width = index.width;
    if (index.width != width) bad("table indices have different widths");
    tables.push_back({index, std::move(rows)});
  }

  const Json& sol_doc = field(doc, "solutions");
  if (!sol_doc.is_object()) bad("'solutions' must be an object keyed by table index");
  std::vector<std::string> solutions;
  std::set<std::string> seen;
  for (const auto& t : tables) {
    const std::string key = t.index.str();
    if (!sol_doc.contains(key)) bad("solution map has no entry for table " + key);
    if (!sol_doc.at(key).is_string()) bad("solution for table " + key + " must be a string");
    solutions.push_back(sol_doc.at(key).get<std::string>());
    seen.insert(key);
  }
  for (const auto& item : sol_doc.items()) {
    if (!seen.count(item.key())) bad("solution map names unknown table " + item.key());
  }

  std::vector<double> weights;
  if (doc.contains("weights")) {
    const Json& w = doc.at("weights");
    if (!w.is_array()) bad("'weights' must be an array");
    for (const Json& x : w) {
      if (!x.is_number()) bad("weights must be numbers");
      weights.push_back(x.get<double>());
    }
  }
  try {
    return {FamilyKind::Custom, name, n, value_bits, width, std::move(tables), std::move(solutions), goodness, v_init,
            std::move(weights)};
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

ProblemFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open family file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("family JSON: malformed document: " + std::string(e.what()));
  }
  return family_from_json(doc);
}

Json histories_to_json(const HistorySet& set, const ProblemFamily& family) {
  const RegisterLayout& layout = family.layout();
  Json list = Json::array();
  for (const auto& h : set.histories) {
    list.push_back({{"tag", h.tag},
                    {"b", to_bits(h.b, layout.nB())},
                    {"a", to_bits(h.a, layout.nA())},
                    {"v_init", to_bits(h.v_init, std::max(layout.nV(), 1))},
                    {"initial_index", h.initial},
                    {"final_index", h.final},
                    {"multiplicity", set.multiplicity.at({h.initial, h.final})}});
  }
  Json sources = Json::array();
  for (const auto& half : set.sources) sources.push_back(describe(family, half));
  return {{"schema", kSchemaVersion}, {"half_tables", std::move(sources)}, {"histories", std::move(list)}};
}

}  // namespace halfinfo
