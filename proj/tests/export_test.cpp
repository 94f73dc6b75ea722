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

#include "zdg/export.hpp"

#include <gtest/gtest.h>

#include <regex>
#include <sstream>
#include <string>

#include "json.hpp"

namespace zdg {
namespace {

int count_matches(const std::string& text, const std::regex& re) {
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                        std::sregex_iterator()));
}

TEST(ExportDot, SmallestGraph) {
  const auto g = build_explicit(2);
  const std::string dot = export_dot(g);
  EXPECT_EQ(dot.rfind("graph zdg_n2 {", 0), 0u);
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  "\d+\+\d+i" \[label=)")), 7);
  EXPECT_EQ(count_matches(dot, std::regex(R"( -- )")), 7);
  EXPECT_NE(dot.find(R"("2+2i" [label="2+2i@1", class=1, part=lambda)"), std::string::npos);
  EXPECT_NE(dot.find(R"("1+1i" [label="1+1i@3", class=3, part=omega)"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
  EXPECT_NE(dot.find("}\n"), std::string::npos);
}

TEST(ExportDot, EdgeCountEqualsSize) {
  const auto g = build_explicit(4);
  EXPECT_EQ(count_matches(export_dot(g), std::regex(" -- ")), static_cast<int>(g.size()));
}

TEST(ExportJson, Schema) {
  const auto doc = nlohmann::json::parse(export_graph_json(build_explicit(2)));
  EXPECT_EQ(doc["n"], 2);
  EXPECT_EQ(doc["order"], 7);
  EXPECT_EQ(doc["size"], 7);
  EXPECT_EQ(doc["edges_e1"], 3);
  EXPECT_EQ(doc["edges_e2"], 4);
  ASSERT_EQ(doc["classes"].size(), 3u);
  EXPECT_EQ(doc["classes"][2]["j"], 3);
  EXPECT_EQ(doc["classes"][2]["size"], 4);
  EXPECT_EQ(doc["classes"][2]["nilpotent_sq"], false);
  EXPECT_EQ(doc["classes"][1]["nilpotent_sq"], true);
}

TEST(ExportJson, KeyOrderIsStable) {
  const std::string text = export_graph_json(build_explicit(3));
  const auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
  EXPECT_LT(pos("n"), pos("order"));
  EXPECT_LT(pos("order"), pos("size"));
  EXPECT_LT(pos("size"), pos("classes"));
  EXPECT_LT(pos("classes"), pos("edges_e1"));
  EXPECT_LT(pos("edges_e1"), pos("edges_e2"));
  const auto reparsed = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(reparsed.dump(2) + "\n", text);
}

}  // namespace
}  // namespace zdg
