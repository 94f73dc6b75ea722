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

#include "zdg/invariants.hpp"

#include <algorithm>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

void require_n(int n, const char* what) {
  if (n < 2) {
    throw DomainError(std::string(what) + " requires n > 1, got " + std::to_string(n));
  }
  if (n > kMaxFormulaExponent) {
    throw DomainError(std::string(what) + ": n = " + std::to_string(n) + " is out of range");
  }
}

void require_graph(const ZdgGraph& graph, const char* what) {
  if (graph.n() < 2) {
    throw DomainError(std::string(what) + " requires a graph with n > 1");
  }
}

Edge ordered(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

void sort_edges(std::vector<Edge>& edges) { std::sort(edges.begin(), edges.end()); }

}  // namespace

Int order_formula(int n) {
  require_n(n, "order_formula");
  return pow2(2 * n - 1) - 1;
}

Int size_formula(int n) {
  require_n(n, "size_formula");
  return pow2(2 * n - 1) * (n - 1) - pow2(n - 1) + 1;
}

Int lambda_lambda_edges_formula(int n) {
  require_n(n, "lambda_lambda_edges_formula");
  return (pow2(n) - 1) * (pow2(n - 1) - 1);
}

Int lambda_omega_edges_formula(int n) {
  require_n(n, "lambda_omega_edges_formula");
  return Int{n} * pow2(2 * n - 1) - pow2(2 * n) + pow2(n);
}

Int degree_formula(int n, int j) {
  require_n(n, "degree_formula");
  if (j < 1 || j > 2 * n - 1) {
    throw DomainError("degree_formula: class index " + std::to_string(j) + " outside [1, 2n-1]");
  }
  // Lambda vertices see every other vertex of their class; Omega ones do not.
  return j <= n ? pow2(2 * n - j) - 2 : pow2(2 * n - j) - 1;
}

Int clique_number(int n) {
  require_n(n, "clique_number");
  return pow2(n) - 1;
}

Int chromatic_number(int n) {
  require_n(n, "chromatic_number");
  return pow2(n) - 1;
}

Int independence_number(int n) {
  require_n(n, "independence_number");
  return pow2(2 * n - 1) - pow2(n) + 1;
}

Int matching_number(int n) {
  require_n(n, "matching_number");
  return pow2(n - 1) + pow2(n - 2) - 1;
}

Int saturation_number(int n) {
  require_n(n, "saturation_number");
  return pow2(n - 1) - 1;
}

Int compressed_order_formula(int n) {
  require_n(n, "compressed_order_formula");
  return 2 * n - 1;
}

Int compressed_size_formula(int n) {
  require_n(n, "compressed_size_formula");
  return Int{n} * n - n;
}

bool planarity_formula(int n) {
  if (n < 1) {
    throw DomainError("planarity_formula requires n >= 1");
  }
  return n <= 2;
}

bool saturation_sandwich_holds(Int order, Int independence, Int saturation, Int matching) {
  return order - independence <= 2 * saturation && saturation <= matching;
}

std::vector<Vertex> clique_witness(const ZdgGraph& graph) {
  require_graph(graph, "clique_witness");
  std::vector<Vertex> lambda;
  for (int j = 1; j <= graph.n(); ++j) {
    for (std::size_t k = 1; k <= graph.class_size(j); ++k) {
      lambda.push_back(graph.member(j, k));
    }
  }
  if (!is_clique(graph.adjacency(), lambda)) {
    throw VerificationError("clique_witness: Lambda is not complete");
  }
  return lambda;
}

ColoringWitness chromatic_witness(const ZdgGraph& graph) {
  require_graph(graph, "chromatic_witness");
  const int n = graph.n();
  const std::size_t omega_color = (std::size_t{1} << n) - 1;
  ColoringWitness w;
  w.colors.assign(graph.order(), omega_color);
  std::size_t offset = 0;
  for (int j = 1; j <= n; ++j) {
    const std::size_t size = graph.class_size(j);
    for (std::size_t k = 1; k <= size; ++k) {
      w.colors[graph.member(j, k)] = k + offset;
    }
    offset += size;
  }
  w.color_count = omega_color;
  if (!proper_coloring_check(graph.adjacency(), w.colors, w.color_count)) {
    throw VerificationError("chromatic_witness: colouring is not proper with 2^n - 1 colours");
  }
  return w;
}

std::vector<Vertex> independence_witness(const ZdgGraph& graph) {
  require_graph(graph, "independence_witness");
  const int n = graph.n();
  std::vector<Vertex> set{graph.member(n, 1)};
  for (Vertex v = graph.class_begin(n + 1); v < graph.order(); ++v) {
    set.push_back(v);
  }
  if (!is_independent_set(graph.adjacency(), set)) {
    throw VerificationError("independence_witness: set is not independent");
  }
  return set;
}

MatchingWitness intra_class_perfect_matching(const ZdgGraph& graph, int j) {
  require_graph(graph, "intra_class_perfect_matching");
  if (j < 2 || j > graph.n()) {
    throw DomainError("intra_class_perfect_matching: class " + std::to_string(j) +
                      " outside [2, n]");
  }
  MatchingWitness w;
  w.kind = MatchingKind::kIntraClassPerfect;
  w.class_index = j;
  for (std::size_t k = 1; k + 1 <= graph.class_size(j); k += 2) {
    w.edges.push_back(ordered(graph.member(j, k), graph.member(j, k + 1)));
  }
  std::vector<Vertex> members;
  for (std::size_t k = 1; k <= graph.class_size(j); ++k) {
    members.push_back(graph.member(j, k));
  }
  const Graph block = graph.adjacency().induced(members);
  std::vector<Edge> local;
  for (const auto& [u, v] : w.edges) {
    local.emplace_back(u - graph.class_begin(j), v - graph.class_begin(j));
  }
  if (!is_matching(block, local) || 2 * local.size() != members.size()) {
    throw VerificationError("intra_class_perfect_matching: not a perfect matching");
  }
  return w;
}

MatchingWitness matching_witness(const ZdgGraph& graph) {
  require_graph(graph, "matching_witness");
  const int n = graph.n();
  MatchingWitness w;
  w.kind = MatchingKind::kMaximum;
  for (int j = 1; j <= n - 1; ++j) {
    for (std::size_t k = 1; k <= graph.class_size(j); ++k) {
      w.edges.push_back(ordered(graph.member(j, k), graph.member(2 * n - j, k)));
    }
  }
  const auto last = intra_class_perfect_matching(graph, n);
  w.edges.insert(w.edges.end(), last.edges.begin(), last.edges.end());
  sort_edges(w.edges);
  if (!is_matching(graph.adjacency(), w.edges) ||
      static_cast<Int>(w.edges.size()) != matching_number(n)) {
    throw VerificationError("matching_witness: construction is not a matching of the stated size");
  }
  return w;
}

MatchingWitness saturation_witness(const ZdgGraph& graph) {
  require_graph(graph, "saturation_witness");
  const int n = graph.n();
  MatchingWitness w;
  w.kind = MatchingKind::kMinimumMaximal;
  const Edge dropped = ordered(graph.member(n, 1), graph.member(n, 2));
  for (int j = 2; j <= n; ++j) {
    for (const auto& e : intra_class_perfect_matching(graph, j).edges) {
      if (e != dropped) {
        w.edges.push_back(e);
      }
    }
  }
  w.edges.push_back(ordered(graph.member(1, 1), graph.member(n, 1)));
  sort_edges(w.edges);
  if (!is_maximal_matching(graph.adjacency(), w.edges) ||
      static_cast<Int>(w.edges.size()) != saturation_number(n)) {
    throw VerificationError("saturation_witness: construction is not a maximal matching of size "
                            "2^{n-1} - 1");
  }
  return w;
}

Vertex max_degree_vertex(const ZdgGraph& graph) {
  require_graph(graph, "max_degree_vertex");
  const std::int64_t half = std::int64_t{1} << (graph.n() - 1);
  const auto v = graph.find(GaussianMod::make(graph.n(), half, half));
  if (!v) {
    throw VerificationError("max_degree_vertex: 2^{n-1}(1+i) is not a vertex");
  }
  return *v;
}

RadiusDiameter radius_diameter(const ZdgGraph& graph, const OracleBudget& budget) {
  require_graph(graph, "radius_diameter");
  RadiusDiameter r;
  r.center = max_degree_vertex(graph);
  r.oracle = bfs_all_eccentricities(graph.adjacency(), budget);
  if (r.oracle.exact() && r.oracle.connected) {
    const auto& ecc = r.oracle.eccentricity;
    r.center_is_unique =
        ecc[r.center] == 1 &&
        std::count(ecc.begin(), ecc.end(), std::size_t{1}) == 1;
  }
  return r;
}

ConnectivityWitness connectivity(const ZdgGraph& graph, const OracleBudget& budget) {
  require_graph(graph, "connectivity");
  const Graph& g = graph.adjacency();
  ConnectivityWitness c;
  c.cut_vertex = max_degree_vertex(graph);
  const auto one_plus_i = graph.find(GaussianMod::make(graph.n(), 1, 1));
  if (!one_plus_i) {
    throw VerificationError("connectivity: 1+i is not a vertex");
  }
  c.bridge = ordered(*one_plus_i, c.cut_vertex);
  c.graph_connected = is_connected(g);

  std::vector<bool> removed(g.order(), false);
  removed[c.cut_vertex] = true;
  c.cut_vertex_disconnects = !is_connected_without(g, removed);

  Graph without_bridge = g;
  without_bridge.remove_edge(c.bridge.first, c.bridge.second);
  c.bridge_disconnects = g.adjacent(c.bridge.first, c.bridge.second) && !is_connected(without_bridge);

  c.vertex_oracle = vertex_connectivity_exact(g, budget);
  c.edge_oracle = edge_connectivity_exact(g, budget);
  return c;
}

PlanarityWitness planarity_verdict(const ZdgGraph& graph) {
  PlanarityWitness p;
  const Graph& g = graph.adjacency();
  p.planar = planarity_formula(graph.n());
  if (graph.n() == 1) {
    p.verified = g.order() == 1 && g.size() == 0;
    return p;
  }
  if (graph.n() == 2) {
    // One-point union of C_3 and 4 K_2: a hub adjacent to all six other
    // vertices, which carry exactly one edge among themselves.
    const Vertex hub = max_degree_vertex(graph);
    p.hub = hub;
    bool ok = g.order() == 7 && g.size() == 7 && g.degree(hub) == 6;
    std::size_t pendants = 0;
    for (Vertex v = 0; v < g.order() && ok; ++v) {
      if (v == hub) {
        continue;
      }
      if (g.degree(v) == 1) {
        ++pendants;
      } else if (g.degree(v) != 2) {
        ok = false;
      }
    }
    p.verified = ok && pendants == 4;
    return p;
  }
  const auto lambda = clique_witness(graph);
  p.k5.assign(lambda.begin(), lambda.begin() + 5);
  p.verified = is_clique(g, p.k5);
  return p;
}

}  // namespace zdg
