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

#include <gtest/gtest.h>

#include "halfinfo/json_io.hpp"

namespace halfinfo {
namespace {

void expect_same_family(const ProblemFamily& a, const ProblemFamily& b) {
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.name(), b.name());
  EXPECT_EQ(a.n(), b.n());
  EXPECT_EQ(a.value_bits(), b.value_bits());
  EXPECT_EQ(a.goodness(), b.goodness());
  EXPECT_EQ(a.v_init(), b.v_init());
  EXPECT_EQ(a.layout(), b.layout());
  EXPECT_EQ(a.solutions(), b.solutions());
  for (std::size_t t = 0; t < a.size(); ++t) {
    EXPECT_EQ(a.table(t).index, b.table(t).index);
    EXPECT_EQ(a.table(t).rows, b.table(t).rows);
  }
  for (std::size_t t = 0; t < a.size(); ++t) EXPECT_NEAR(a.weights()[t], b.weights()[t], 1e-15);
}

TEST(FamilyJson, RoundTripsEveryBuiltInFamily) {
  for (auto [name, n] : {std::pair{"grover", 3}, std::pair{"dj", 2}, std::pair{"simon", 3}, std::pair{"perm", 2}}) {
    const ProblemFamily f = build_family(name, n);
    const Json doc = family_to_json(f);
    EXPECT_EQ(doc.at("schema"), 1);
    const ProblemFamily back = family_from_json(Json::parse(doc.dump()));
    EXPECT_EQ(back.kind(), FamilyKind::Custom);
    expect_same_family(f, back);
    EXPECT_EQ(family_to_json(back).dump(), doc.dump());
  }
}

TEST(FamilyJson, KeepsNonUniformWeights) {
  const ProblemFamily f = build_family("grover", 1, {0.6, 0.8});
  const Json doc = family_to_json(f);
  ASSERT_TRUE(doc.contains("weights"));
  expect_same_family(f, family_from_json(doc));
  EXPECT_FALSE(family_to_json(build_family("grover", 1)).contains("weights"));
}

TEST(FamilyJson, RejectsBrokenDocuments) {
  const Json good = family_to_json(build_family("dj", 2));
  auto broken = [&](auto edit) {
    Json doc = good;
    edit(doc);
    return doc;
  };
  const std::vector<Json> cases{
      Json::array(),
      broken([](Json& d) { d.erase("tables"); }),
      broken([](Json& d) { d["schema"] = 2; }),
      broken([](Json& d) { d["n"] = "2"; }),
      broken([](Json& d) { d["goodness"] = "whatever"; }),
      broken([](Json& d) { d["v_init"] = 3; }),
      broken([](Json& d) { d["tables"][0]["rows"][0] = "2"; }),
      broken([](Json& d) { d["tables"][0]["rows"][0] = "01"; }),
      broken([](Json& d) { d["tables"][0]["rows"].erase(0); }),
      broken([](Json& d) { d["tables"][0]["b"] = "000"; }),
      broken([](Json& d) { d["tables"][1]["b"] = "0000"; }),
      broken([](Json& d) { d["solutions"].erase("0000"); }),
      broken([](Json& d) { d["solutions"]["0001"] = "constant"; }),
      broken([](Json& d) { d["solutions"]["0000"] = 1; }),
      broken([](Json& d) { d["weights"] = Json::array({1.0}); }),
      broken([](Json& d) { d["tables"] = Json::array(); }),
  };
  for (const Json& doc : cases) EXPECT_THROW(family_from_json(doc), std::invalid_argument) << doc.dump();
}

TEST(FamilyJson, MissingFileIsAnArgumentError) {
  EXPECT_THROW(load_family("/nonexistent/family.json"), std::invalid_argument);
}

TEST(StateJson, BlocksAsPairs) {
  const ProblemFamily g = build_family("grover", 2);
  const Json doc = state_to_json(prepare_initial(g));
  EXPECT_EQ(doc.at("schema"), 1);
  EXPECT_EQ(doc.at("layout").at("nV"), 1);
  ASSERT_EQ(doc.at("branches").size(), 4u);
  const Json& block = doc.at("branches")[0].at("blocks")[0];
  EXPECT_EQ(block.at("b"), "00");
  EXPECT_EQ(block.at("amplitudes").size(), 8u);
  EXPECT_NEAR(block.at("amplitudes")[0][0].get<double>(), 1.0 / std::sqrt(32.0), 1e-15);
}

TEST(TraceJson, StagesAndOutcomes) {
  const ProblemFamily g = build_family("grover", 2);
  RunOptions o;
  o.bob_choice = BitString::parse("11");
  const Json doc = trace_to_json(run_grover(2, o), g);
  EXPECT_EQ(doc.at("order"), "bob_first");
  EXPECT_EQ(doc.at("outcomes").at("bob"), "11");
  EXPECT_EQ(doc.at("outcomes").at("alice"), "11");
  EXPECT_EQ(doc.at("evaluations"), 1);
  EXPECT_EQ(doc.at("stages")[0].at("stage"), "initial");
  EXPECT_NEAR(doc.at("stages")[0].at("b_entropy").get<double>(), 2.0, 1e-9);
}

TEST(QueryJson, TableAndMarkdownAgree) {
  const ProblemFamily d = build_family("dj", 2);
  const QueryReport r = verify_fifty_rule(d);
  const Json doc = query_report_to_json(r, d);
  EXPECT_EQ(doc.at("classical"), 3);
  EXPECT_EQ(doc.at("breakdown").size(), r.breakdown.size());
  const std::string md = query_report_to_markdown(r);
  EXPECT_NE(md.find("| dj(2) | 1 | 3 | 1 | yes |"), std::string::npos) << md;
}

TEST(HistoryJson, Fields) {
  const ProblemFamily g = build_family("grover", 2);
  const Json doc = histories_to_json(collect_histories(g, {HalfTable{0, {2, 3}}}), g);
  ASSERT_EQ(doc.at("histories").size(), 8u);
  const Json& h = doc.at("histories")[0];
  for (const char* key : {"tag", "b", "a", "v_init", "initial_index", "final_index"}) EXPECT_TRUE(h.contains(key));
  EXPECT_EQ(doc.at("half_tables")[0], "{10:0,11:0}");
}

}  // namespace
}  // namespace halfinfo
