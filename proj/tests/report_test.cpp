// Copyright 2026 The zdg Authors.
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

#include "zdg/report.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"
#include "zdg/errors.hpp"

namespace zdg {
namespace {

const InvariantRecord& invariant(const AnalysisReport& r, const std::string& name) {
  const auto it = std::find_if(r.invariants.begin(), r.invariants.end(),
                               [&](const InvariantRecord& x) { return x.name == name; });
  if (it == r.invariants.end()) {
    throw std::out_of_range("no invariant " + name);
  }
  return *it;
}

const IndexRecord& index(const AnalysisReport& r, const std::string& name) {
  const auto it = std::find_if(r.indices.begin(), r.indices.end(),
                               [&](const IndexRecord& x) { return x.name == name; });
  if (it == r.indices.end()) {
    throw std::out_of_range("no index " + name);
  }
  return *it;
}

TEST(Report, StatusNames) {
  EXPECT_EQ(status_name(Status::kMatch), "match");
  EXPECT_EQ(status_name(Status::kMismatch), "mismatch");
  EXPECT_EQ(status_name(Status::kOracleSkipped), "oracle-skipped");
  EXPECT_EQ(status_name(Status::kExpectedDeviation), "expected-deviation");
}

TEST(Report, RenderValue) {
  EXPECT_EQ(render_value(ReportValue{}), "-");
  EXPECT_EQ(render_value(Int{1} << 100), "1267650600228229401496703205376");
  EXPECT_EQ(render_value(0.5), "0.5");
  EXPECT_EQ(render_value(true), "true");
}

TEST(Report, DeviationRegistry) {
  EXPECT_EQ(expected_deviations().size(), 2u);
  EXPECT_NE(find_expected_deviation("randic"), nullptr);
  EXPECT_NE(find_expected_deviation("zagreb2"), nullptr);
  EXPECT_EQ(find_expected_deviation("wiener"), nullptr);
}

TEST(Report, Digest) {
  EXPECT_EQ(digest(""), "cbf29ce484222325");
  EXPECT_EQ(digest("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(digest("abc").size(), 16u);
}

TEST(Analyze, SmallestCaseMatchesEverywhere) {
  const auto r = analyze(2);
  EXPECT_TRUE(r.graph_built);
  EXPECT_FALSE(r.has_unexpected_mismatch());
  for (const auto& x : r.invariants) {
    EXPECT_EQ(x.status, Status::kMatch) << x.name;
  }
  EXPECT_EQ(std::get<Int>(invariant(r, "order").oracle), 7);
  EXPECT_EQ(std::get<Int>(invariant(r, "matching_number").oracle), 2);
  EXPECT_EQ(std::get<std::string>(invariant(r, "degree_profile").oracle), "6x1,2x2,1x4");
  EXPECT_EQ(index(r, "wiener").status, Status::kMatch);
  EXPECT_EQ(std::get<Int>(index(r, "wiener").oracle), 35);
  const auto& m2 = index(r, "zagreb2");
  EXPECT_EQ(m2.status, Status::kExpectedDeviation);
  EXPECT_EQ(std::get<Int>(m2.published_form), 48);
  EXPECT_EQ(std::get<Int>(m2.oracle), 52);
  EXPECT_EQ(std::get<Int>(m2.correction), 4);
  const auto& rand = index(r, "randic");
  EXPECT_EQ(rand.status, Status::kExpectedDeviation);
  EXPECT_DOUBLE_EQ(std::get<double>(rand.correction), 0.5);
  EXPECT_NE(rand.note.find("0.5"), std::string::npos);
}

TEST(Analyze, ChromaticCertifiedAtThree) {
  const auto r = analyze(3);
  EXPECT_EQ(std::get<Int>(invariant(r, "chromatic_number").oracle), 7);
  EXPECT_EQ(std::get<Int>(invariant(r, "clique_number").oracle), 7);
  EXPECT_EQ(invariant(r, "weakly_perfect").status, Status::kMatch);
  EXPECT_FALSE(r.has_unexpected_mismatch());
}

TEST(Analyze, TrivialRing) {
  const auto r = analyze(1);
  EXPECT_FALSE(r.has_unexpected_mismatch());
  EXPECT_EQ(std::get<Int>(index(r, "wiener").oracle), 0);
  EXPECT_EQ(index(r, "randic").status, Status::kMatch);
}

TEST(Analyze, NoOraclesMeansSkipped) {
  AnalysisOptions opts;
  opts.oracles.enabled.clear();
  const auto r = analyze(3, opts);
  EXPECT_EQ(invariant(r, "clique_number").status, Status::kOracleSkipped);
  EXPECT_EQ(invariant(r, "radius").status, Status::kOracleSkipped);
  EXPECT_EQ(invariant(r, "chromatic_number").status, Status::kOracleSkipped);
  EXPECT_EQ(invariant(r, "order").status, Status::kMatch);
  EXPECT_FALSE(r.has_unexpected_mismatch());
}

TEST(Analyze, FormulaOnly) {
  AnalysisOptions opts;
  opts.build_graph = false;
  const auto r = analyze(12, opts);
  EXPECT_FALSE(r.graph_built);
  EXPECT_FALSE(r.has_unexpected_mismatch());
  EXPECT_EQ(invariant(r, "identity_wiener_statement_vs_proof").status, Status::kMatch);
  EXPECT_EQ(invariant(r, "identity_size_vs_edge_partition").status, Status::kMatch);
  EXPECT_EQ(invariant(r, "identity_saturation_sandwich").status, Status::kMatch);
  EXPECT_EQ(invariant(r, "order").status, Status::kOracleSkipped);
  EXPECT_EQ(index(r, "zagreb2").status, Status::kOracleSkipped);
}

TEST(Analyze, RejectsOutOfRange) {
  EXPECT_THROW(analyze(0), DomainError);
  EXPECT_THROW(analyze(kMaxFormulaExponent + 1), DomainError);
}

TEST(Analyze, MismatchIsDetected) {
  AnalysisReport r;
  r.n = 2;
  r.invariants.push_back({"x", Int{1}, Int{2}, "", Status::kMismatch, ""});
  EXPECT_TRUE(r.has_unexpected_mismatch());
  r.invariants.back().status = Status::kExpectedDeviation;
  EXPECT_FALSE(r.has_unexpected_mismatch());
}

TEST(Rendering, JsonSchemaAndRoundTrip) {
  const auto r = analyze(3);
  const std::string text = to_json(r);
  const auto doc = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(doc.dump(2) + "\n", text);
  EXPECT_EQ(doc["n"], 3);
  const auto& first = doc["invariants"][0];
  for (const char* key : {"name", "formula", "oracle", "witness_digest", "status"}) {
    EXPECT_TRUE(first.contains(key)) << key;
  }
  for (const auto& idx : doc["indices"]) {
    for (const char* key : {"name", "paper_form", "full_form", "oracle", "status", "correction"}) {
      EXPECT_TRUE(idx.contains(key)) << key;
    }
  }
  auto keys = std::vector<std::string>{};
  for (const auto& [k, v] : doc.items()) {
    keys.push_back(k);
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "invariants", "indices"}));
}

TEST(Rendering, JsonRandicHasTwelveDigits) {
  const auto doc = nlohmann::ordered_json::parse(to_json(analyze(2)));
  for (const auto& idx : doc["indices"]) {
    if (idx["name"] == "randic") {
      EXPECT_DOUBLE_EQ(idx["oracle"].get<double>(), 2.71034343105);
      EXPECT_DOUBLE_EQ(idx["paper_form"].get<double>(), 2.21034343105);
    }
  }
}

TEST(Rendering, LargeIntegersBecomeStrings) {
  AnalysisOptions opts;
  opts.build_graph = false;
  const auto doc = nlohmann::ordered_json::parse(to_json(analyze(16, opts)));
  for (const auto& idx : doc["indices"]) {
    if (idx["name"] == "zagreb2") {
      EXPECT_TRUE(idx["full_form"].is_string());
    }
    if (idx["name"] == "wiener") {
      EXPECT_TRUE(idx["full_form"].is_number_integer());
    }
  }
}

TEST(Rendering, JsonArrayRoundTrips) {
  const std::string text = to_json(std::vector<AnalysisReport>{analyze(2), analyze(3)});
  EXPECT_EQ(nlohmann::ordered_json::parse(text).dump(2) + "\n", text);
}

TEST(Rendering, MarkdownTable) {
  const std::string md = to_markdown(analyze(3));
  EXPECT_NE(md.find("| invariant | formula | oracle | status |"), std::string::npos);
  EXPECT_NE(md.find("| chromatic_number | 7 | 7 | match |"), std::string::npos);
  EXPECT_NE(md.find("| clique_number | 7 | 7 | match |"), std::string::npos);
  EXPECT_NE(md.find("expected-deviation"), std::string::npos);
}

TEST(Rendering, CsvQuotesFields) {
  const std::string csv = to_csv(analyze(2));
  EXPECT_EQ(csv.rfind("n,section,name,formula,full_form,oracle,correction,status\n", 0), 0u);
  EXPECT_NE(csv.find("2,invariant,degree_profile,\"6x1,2x2,1x4\",,\"6x1,2x2,1x4\",,match"), std::string::npos);
  EXPECT_NE(csv.find("2,index,zagreb2,48,52,52,4,expected-deviation"), std::string::npos);
  EXPECT_EQ(to_csv(analyze(2), false).find("n,section"), std::string::npos);
}

TEST(Rendering, VerifySummary) {
  const std::vector<AnalysisReport> reports{analyze(2), analyze(3)};
  const std::string md = verify_summary_markdown(reports);
  EXPECT_NE(md.find("unexpected mismatches: 0; expected deviations: 4"), std::string::npos);
  const std::string csv = verify_summary_csv(reports);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'),
            1 + static_cast<long>(reports[0].invariants.size() + reports[0].indices.size() +
                                  reports[1].invariants.size() + reports[1].indices.size()));
}

}  // namespace
}  // namespace zdg
