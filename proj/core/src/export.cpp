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

#include <sstream>

#include "json.hpp"

namespace zdg {

namespace {

const char* part_name(const ZdgGraph& g, Vertex v) { return g.in_lambda(v) ? "lambda" : "omega"; }

}  // namespace

std::string export_dot(const ZdgGraph& graph) {
  std::ostringstream out;
  out << "graph zdg_n" << graph.n() << " {\n";
  out << "  node [style=filled];\n";
  for (Vertex v = 0; v < graph.order(); ++v) {
    const auto id = to_string(graph.element(v));
    const int j = graph.class_index(v);
    const bool lambda = graph.in_lambda(v);
    out << "  \"" << id << "\" [label=\"" << id << "@" << j << "\", class=" << j
        << ", part=" << part_name(graph, v) << ", fillcolor=" << (lambda ? "lightcoral" : "lightblue")
        << "];\n";
  }
  for (const auto& [u, v] : graph.adjacency().edges()) {
    out << "  \"" << to_string(graph.element(u)) << "\" -- \"" << to_string(graph.element(v))
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string export_graph_json(const ZdgGraph& graph) {
  nlohmann::ordered_json doc;
  doc["n"] = graph.n();
  doc["order"] = graph.order();
  doc["size"] = graph.size();
  auto classes = nlohmann::ordered_json::array();
  for (int j = 1; j <= graph.class_count(); ++j) {
    nlohmann::ordered_json c;
    c["j"] = j;
    c["size"] = graph.class_size(j);
    c["nilpotent_sq"] = j <= graph.n();
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  const auto counts = graph.edge_partition();
  doc["edges_e1"] = counts.lambda_lambda;
  doc["edges_e2"] = counts.lambda_omega;
  return doc.dump(2) + "\n";
}

}  // namespace zdg
