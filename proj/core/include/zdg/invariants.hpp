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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/integer.hpp"
#include "zdg/oracles.hpp"
#include "zdg/zdg_graph.hpp"

namespace zdg {

// Closed forms. All require n >= 2 and throw DomainError otherwise.

Int order_formula(int n);             // 2^{2n-1} - 1
Int size_formula(int n);              // 2^{2n-1}(n-1) - 2^{n-1} + 1
Int lambda_lambda_edges_formula(int n);  // (2^n - 1)(2^{n-1} - 1)
Int lambda_omega_edges_formula(int n);   // n 2^{2n-1} - 2^{2n} + 2^n
/// 2^{2n-j} - 2 for j <= n, 2^{2n-j} - 1 for j > n. Requires 1 <= j <= 2n-1.
Int degree_formula(int n, int j);
Int clique_number(int n);             // 2^n - 1
Int chromatic_number(int n);          // 2^n - 1
Int independence_number(int n);       // 2^{2n-1} - 2^n + 1
Int matching_number(int n);           // 2^{n-1} + 2^{n-2} - 1
Int saturation_number(int n);         // 2^{n-1} - 1
Int compressed_order_formula(int n);  // 2n - 1
Int compressed_size_formula(int n);   // n^2 - n
/// n = 1 or n = 2. Accepts any n >= 1.
bool planarity_formula(int n);

/// (order - independence) / 2 <= saturation <= matching.
bool saturation_sandwich_holds(Int order, Int independence, Int saturation, Int matching);

// Witnesses. Each is checked against the graph before it is returned and a
// failed check throws VerificationError. All require n >= 2.

/// Lambda, i.e. the first 2^n - 1 vertices in class-major order.
std::vector<Vertex> clique_witness(const ZdgGraph& graph);

struct ColoringWitness {
  /// colors[v] in [1, 2^n - 1].
  std::vector<std::size_t> colors;
  std::size_t color_count = 0;
};

/// The k-th member of V_{d_j}, j <= n, gets colour k + |V_{d_1}| + ... +
/// |V_{d_{j-1}}|; every Omega vertex gets 2^n - 1.
ColoringWitness chromatic_witness(const ZdgGraph& graph);

/// Omega plus the first member of V_{d_n}.
std::vector<Vertex> independence_witness(const ZdgGraph& graph);

enum class MatchingKind { kMaximum, kMinimumMaximal, kIntraClassPerfect };

struct MatchingWitness {
  std::vector<Edge> edges;  // (u, v) with u < v
  MatchingKind kind = MatchingKind::kMaximum;
  int class_index = 0;  // only for kIntraClassPerfect
};

/// Pairs (2t-1, 2t) inside V_{d_j}. Requires 2 <= j <= n.
MatchingWitness intra_class_perfect_matching(const ZdgGraph& graph, int j);

/// k-th of V_{d_j} with k-th of V_{d_{2n-j}} for j < n, plus the intra-class
/// pairs of V_{d_n}.
MatchingWitness matching_witness(const ZdgGraph& graph);

/// Intra-class pairs of V_{d_2}..V_{d_n} minus the first pair of V_{d_n},
/// plus the edge from V_{d_1} to the first member of V_{d_n}. Verified
/// maximal.
MatchingWitness saturation_witness(const ZdgGraph& graph);

/// The vertex 2^{n-1}(1+i), sole member of V_{d_1}.
Vertex max_degree_vertex(const ZdgGraph& graph);

struct RadiusDiameter {
  std::size_t formula_radius = 1;
  std::size_t formula_diameter = 2;
  EccentricityResult oracle;
  Vertex center = 0;
  /// Oracle ran and only `center` has eccentricity 1 (not self-centred).
  bool center_is_unique = false;
};

RadiusDiameter radius_diameter(const ZdgGraph& graph, const OracleBudget& budget);

struct ConnectivityWitness {
  std::size_t formula_vertex = 1;
  std::size_t formula_edge = 1;
  Vertex cut_vertex = 0;
  Edge bridge{0, 0};
  bool graph_connected = false;
  bool cut_vertex_disconnects = false;
  bool bridge_disconnects = false;
  ConnectivityResult vertex_oracle;
  ConnectivityResult edge_oracle;
};

/// Cut vertex 2^{n-1}(1+i); bridge from 1+i to it.
ConnectivityWitness connectivity(const ZdgGraph& graph, const OracleBudget& budget);

struct PlanarityWitness {
  bool planar = false;
  /// n >= 3: five Lambda vertices inducing K_5.
  std::vector<Vertex> k5;
  /// n = 2: the hub shared by the triangle and the four pendant edges.
  std::optional<Vertex> hub;
  bool verified = false;
};

/// n = 1: K_1. n = 2: checks the graph is a triangle and four pendant edges
/// sharing one vertex. n >= 3: exhibits K_5.
PlanarityWitness planarity_verdict(const ZdgGraph& graph);

}  // namespace zdg
