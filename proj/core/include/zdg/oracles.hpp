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

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zdg/graph.hpp"
#include "zdg/integer.hpp"

// Exact, structure-blind algorithms used as ground truth. Every function here
// sees only a Graph; none of them knows about rings or associate classes.

namespace zdg {

enum class OracleKind {
  kEccentricity,
  kClique,
  kIndependence,
  kMatching,
  kSaturation,
  kConnectivity,
  kColoring,
};

std::string oracle_name(OracleKind kind);
std::optional<OracleKind> parse_oracle_name(const std::string& name);
const std::vector<OracleKind>& all_oracles();

/// Per-oracle resource limits. An oracle that would exceed either limit
/// reports kSkipped instead of a partial answer.
struct OracleBudget {
  std::size_t max_vertices = 0;
  double time_budget_seconds = 60.0;
};

struct OracleSettings {
  std::map<OracleKind, OracleBudget> budgets;
  std::set<OracleKind> enabled;

  /// Clique/independence up to 127 vertices, saturation up to 31, matching up
  /// to 511, BFS and connectivity up to 2047; 60 s each; all enabled.
  static OracleSettings defaults();

  /// Same limits with every time budget replaced.
  OracleSettings with_time_budget(double seconds) const;

  bool enabled_for(OracleKind kind) const { return enabled.count(kind) != 0; }
  const OracleBudget& budget(OracleKind kind) const { return budgets.at(kind); }
};

enum class OracleOutcome { kExact, kSkipped };

struct VertexSetResult {
  OracleOutcome outcome = OracleOutcome::kSkipped;
  std::vector<Vertex> witness;  // sorted ascending
  std::string skip_reason;

  bool exact() const { return outcome == OracleOutcome::kExact; }
  std::size_t size() const { return witness.size(); }
};

struct MatchingResult {
  OracleOutcome outcome = OracleOutcome::kSkipped;
  std::vector<Edge> matching;  // (u, v) with u < v, sorted
  std::string skip_reason;

  bool exact() const { return outcome == OracleOutcome::kExact; }
  std::size_t size() const { return matching.size(); }
};

struct ConnectivityResult {
  OracleOutcome outcome = OracleOutcome::kSkipped;
  std::size_t value = 0;
  /// A minimum separating vertex set (vertex connectivity only).
  std::vector<Vertex> separator;
  std::string skip_reason;

  bool exact() const { return outcome == OracleOutcome::kExact; }
};

struct EccentricityResult {
  OracleOutcome outcome = OracleOutcome::kSkipped;
  bool connected = false;
  std::vector<std::size_t> eccentricity;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::string skip_reason;

  bool exact() const { return outcome == OracleOutcome::kExact; }
};

/// All-pairs BFS. Disconnected graphs come back with connected = false and
/// no eccentricities.
EccentricityResult bfs_all_eccentricities(const Graph& g, const OracleBudget& budget = {2047, 60.0});

/// Sum of d(u, v) over unordered pairs; nullopt when g is disconnected.
std::optional<Int> bfs_distance_sum(const Graph& g);

/// Branch and bound with greedy-colouring bounds.
VertexSetResult max_clique_exact(const Graph& g, const OracleBudget& budget);
/// Maximum clique of the complement.
VertexSetResult max_independent_exact(const Graph& g, const OracleBudget& budget);
/// Best independent set forced to contain `v`.
VertexSetResult max_independent_exact_containing(const Graph& g, Vertex v,
                                                 const OracleBudget& budget);

/// Edmonds' blossom algorithm.
MatchingResult max_matching_exact(const Graph& g, const OracleBudget& budget = {1u << 20, 60.0});

/// Minimum maximal matching (saturation number) by branch and bound.
MatchingResult min_maximal_matching_exact(const Graph& g, const OracleBudget& budget);

/// Smallest separating vertex set, searching k = 1, 2, ... in lexicographic
/// order. K_1 has connectivity 0 and K_m has m - 1.
ConnectivityResult vertex_connectivity_exact(const Graph& g, const OracleBudget& budget);

/// Minimum over t of the unit-capacity max flow from vertex 0 to t.
ConnectivityResult edge_connectivity_exact(const Graph& g, const OracleBudget& budget);

/// `colors[v]` is the colour of vertex v. True iff no edge is monochromatic
/// and exactly `claimed_colors` distinct colours occur.
bool proper_coloring_check(const Graph& g, const std::vector<std::size_t>& colors,
                           std::size_t claimed_colors);

}  // namespace zdg
