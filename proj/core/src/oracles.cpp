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

#include "zdg/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace zdg {

std::string oracle_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::kEccentricity:
      return "eccentricity";
    case OracleKind::kClique:
      return "clique";
    case OracleKind::kIndependence:
      return "independence";
    case OracleKind::kMatching:
      return "matching";
    case OracleKind::kSaturation:
      return "saturation";
    case OracleKind::kConnectivity:
      return "connectivity";
    case OracleKind::kColoring:
      return "coloring";
  }
  return "unknown";
}

const std::vector<OracleKind>& all_oracles() {
  static const std::vector<OracleKind> kinds = {
      OracleKind::kEccentricity, OracleKind::kClique,       OracleKind::kIndependence,
      OracleKind::kMatching,     OracleKind::kSaturation,   OracleKind::kConnectivity,
      OracleKind::kColoring,
  };
  return kinds;
}

std::optional<OracleKind> parse_oracle_name(const std::string& name) {
  for (const auto kind : all_oracles()) {
    if (oracle_name(kind) == name) {
      return kind;
    }
  }
  return std::nullopt;
}

OracleSettings OracleSettings::defaults() {
  OracleSettings s;
  s.budgets[OracleKind::kEccentricity] = {2047, 60.0};
  s.budgets[OracleKind::kClique] = {127, 60.0};
  s.budgets[OracleKind::kIndependence] = {127, 60.0};
  s.budgets[OracleKind::kMatching] = {511, 60.0};
  s.budgets[OracleKind::kSaturation] = {31, 60.0};
  s.budgets[OracleKind::kConnectivity] = {2047, 60.0};
  s.budgets[OracleKind::kColoring] = {32767, 60.0};
  s.enabled.insert(all_oracles().begin(), all_oracles().end());
  return s;
}

OracleSettings OracleSettings::with_time_budget(double seconds) const {
  OracleSettings s = *this;
  for (auto& [kind, budget] : s.budgets) {
    budget.time_budget_seconds = seconds;
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(double seconds)
      : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds))) {}

  /// Polls the clock every 1024 calls.
  bool expired() {
    if (expired_) {
      return true;
    }
    if ((++calls_ & 1023U) == 0 && Clock::now() > end_) {
      expired_ = true;
    }
    return expired_;
  }

 private:
  Clock::time_point end_;
  std::uint64_t calls_ = 0;
  bool expired_ = false;
};

std::string too_large(std::size_t order, std::size_t cap) {
  return "graph has " + std::to_string(order) + " vertices, budget allows " + std::to_string(cap);
}

const std::string kTimeout = "time budget exhausted";

// ---------------------------------------------------------------------------
// Maximum clique: colour-ordered branch and bound over bitsets.

class Bits {
 public:
  explicit Bits(std::size_t words) : w_(words, 0) {}

  void set(Vertex v) { w_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(Vertex v) { w_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool any() const {
    return std::any_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x != 0; });
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] != 0) {
        return i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i]));
      }
    }
    return SIZE_MAX;
  }
  void and_with(std::span<const std::uint64_t> row) {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      w_[i] &= row[i];
    }
  }
  void and_not(std::span<const std::uint64_t> row) {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      w_[i] &= ~row[i];
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, double seconds) : g_(g), deadline_(seconds) {}

  bool run() {
    Bits all(g_.words_per_row());
    for (Vertex v = 0; v < g_.order(); ++v) {
      all.set(v);
    }
    expand(all);
    return !deadline_.expired();
  }

  std::vector<Vertex> best() const {
    auto out = best_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void expand(Bits candidates) {
    if (deadline_.expired()) {
      return;
    }
    // Greedy colouring in index order gives each vertex an upper bound.
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    Bits uncolored = candidates;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bits available = uncolored;
      while (available.any()) {
        const Vertex v = available.first();
        available.reset(v);
        available.and_not(g_.row(v));
        uncolored.reset(v);
        order.push_back(v);
        bound.push_back(color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) {
        return;
      }
      const Vertex v = order[i];
      current_.push_back(v);
      Bits next = candidates;
      next.and_with(g_.row(v));
      if (next.any()) {
        expand(next);
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      candidates.reset(v);
      if (deadline_.expired()) {
        return;
      }
    }
  }

  const Graph& g_;
  Deadline deadline_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

// ---------------------------------------------------------------------------
// Maximum matching: Edmonds' blossom algorithm, O(V^3).

class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.order()), adj_(n_), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), blossom_(n_) {
    for (Vertex v = 0; v < n_; ++v) {
      adj_[v] = g.neighbors(v);
    }
  }

  bool run(Deadline& deadline) {
    // Greedy start, lowest index first.
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone) {
        continue;
      }
      for (const Vertex w : adj_[v]) {
        if (match_[w] == kNone) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (match_[root] != kNone) {
        continue;
      }
      if (deadline.expired()) {
        return false;
      }
      Vertex v = find_path(root);
      while (v != kNone) {
        const Vertex pv = parent_[v];
        const Vertex ppv = match_[pv];
        match_[v] = pv;
        match_[pv] = v;
        v = ppv;
      }
    }
    return true;
  }

  std::vector<Edge> matching() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < n_; ++v) {
      if (match_[v] != kNone && v < match_[v]) {
        out.emplace_back(v, match_[v]);
      }
    }
    return out;
  }

 private:
  static constexpr Vertex kNone = SIZE_MAX;

  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) {
        break;
      }
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) {
        return b;
      }
      b = parent_[match_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::iota(base_.begin(), base_.end(), Vertex{0});
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) {
          continue;
        }
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const Vertex current_base = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, current_base, to);
          mark_path(to, current_base, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = current_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) {
            return to;
          }
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
};

// ---------------------------------------------------------------------------
// Minimum maximal matching. Every edge needs a matched endpoint, so for the
// first edge with both ends free we either match one chosen endpoint x to
// some free neighbour, or exclude x for good.

class SaturationSearch {
 public:
  SaturationSearch(const Graph& g, double seconds)
      : g_(g), edges_(g.edges()), deadline_(seconds), matched_(g.order()), excluded_(g.order()) {}

  bool run() {
    // Greedy maximal matching as the incumbent.
    std::vector<bool> used(g_.order(), false);
    for (const auto& [u, v] : edges_) {
      if (!used[u] && !used[v]) {
        used[u] = used[v] = true;
        best_.emplace_back(u, v);
      }
    }
    search();
    return !deadline_.expired();
  }

  std::vector<Edge> best() const {
    auto out = best_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool free(Vertex v) const { return !matched_[v]; }

  void search() {
    if (deadline_.expired()) {
      return;
    }
    const Edge* pick = nullptr;
    for (const auto& e : edges_) {
      if (free(e.first) && free(e.second)) {
        if (excluded_[e.first] && excluded_[e.second]) {
          return;  // this edge can never be covered
        }
        if (pick == nullptr) {
          pick = &e;
        }
      }
    }
    if (pick == nullptr) {
      if (current_.size() < best_.size()) {
        best_ = current_;
      }
      return;
    }
    if (current_.size() + lower_bound() >= best_.size()) {
      return;
    }
    const Vertex x = excluded_[pick->first] ? pick->second : pick->first;
    for (const Vertex w : g_.neighbors(x)) {
      if (free(w) && !excluded_[w]) {
        matched_[x] = matched_[w] = true;
        current_.emplace_back(std::min(x, w), std::max(x, w));
        search();
        current_.pop_back();
        matched_[x] = matched_[w] = false;
      }
    }
    excluded_[x] = true;
    search();
    excluded_[x] = false;
  }

  // Each new matching edge covers edges at two vertices, so it can hit at
  // most two edges of a vertex-disjoint family of uncovered edges.
  std::size_t lower_bound() const {
    std::vector<bool> touched(g_.order(), false);
    std::size_t disjoint = 0;
    for (const auto& [u, v] : edges_) {
      if (free(u) && free(v) && !touched[u] && !touched[v]) {
        touched[u] = touched[v] = true;
        ++disjoint;
      }
    }
    return (disjoint + 1) / 2;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  Deadline deadline_;
  std::vector<bool> matched_;
  std::vector<bool> excluded_;
  std::vector<Edge> current_;
  std::vector<Edge> best_;
};

// ---------------------------------------------------------------------------
// Unit-capacity max flow on an undirected graph (Edmonds-Karp).

std::size_t unit_max_flow(const std::vector<std::vector<Vertex>>& adj, Vertex s, Vertex t) {
  const std::size_t n = adj.size();
  // flow[u][k] is the flow on the arc u -> adj[u][k].
  std::vector<std::vector<int>> flow(n);
  std::vector<std::vector<std::size_t>> reverse(n);
  for (Vertex u = 0; u < n; ++u) {
    flow[u].assign(adj[u].size(), 0);
    reverse[u].resize(adj[u].size());
    for (std::size_t k = 0; k < adj[u].size(); ++k) {
      const Vertex v = adj[u][k];
      reverse[u][k] = static_cast<std::size_t>(
          std::lower_bound(adj[v].begin(), adj[v].end(), u) - adj[v].begin());
    }
  }
  std::size_t total = 0;
  for (;;) {
    std::vector<std::pair<Vertex, std::size_t>> via(n, {SIZE_MAX, 0});
    via[s] = {s, 0};
    std::deque<Vertex> queue{s};
    while (!queue.empty() && via[t].first == SIZE_MAX) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < adj[u].size(); ++k) {
        const Vertex v = adj[u][k];
        if (via[v].first == SIZE_MAX && flow[u][k] < 1) {
          via[v] = {u, k};
          queue.push_back(v);
        }
      }
    }
    if (via[t].first == SIZE_MAX) {
      return total;
    }
    for (Vertex v = t; v != s;) {
      const auto [u, k] = via[v];
      flow[u][k] += 1;
      flow[v][reverse[u][k]] -= 1;
      v = u;
    }
    ++total;
  }
}

bool next_combination(std::vector<Vertex>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        combo[j] = combo[j - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

EccentricityResult bfs_all_eccentricities(const Graph& g, const OracleBudget& budget) {
  EccentricityResult result;
  if (g.order() > budget.max_vertices) {
    result.skip_reason = too_large(g.order(), budget.max_vertices);
    return result;
  }
  Deadline deadline(budget.time_budget_seconds);
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
  }
  result.connected = true;
  result.eccentricity.assign(n, 0);
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    if (deadline.expired()) {
      result.eccentricity.clear();
      result.skip_reason = kTimeout;
      return result;
    }
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (const Vertex w : adj[u]) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      result.outcome = OracleOutcome::kExact;
      result.connected = false;
      result.eccentricity.clear();
      return result;
    }
    result.eccentricity[s] = dist[queue[tail - 1]];
  }
  result.outcome = OracleOutcome::kExact;
  if (n > 0) {
    result.radius = *std::min_element(result.eccentricity.begin(), result.eccentricity.end());
    result.diameter = *std::max_element(result.eccentricity.begin(), result.eccentricity.end());
  }
  return result;
}

std::optional<Int> bfs_distance_sum(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
  }
  Int twice = 0;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      twice += static_cast<Int>(dist[u]);
      for (const Vertex w : adj[u]) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) {
      return std::nullopt;
    }
  }
  return twice / 2;
}

VertexSetResult max_clique_exact(const Graph& g, const OracleBudget& budget) {
  VertexSetResult result;
  if (g.order() > budget.max_vertices) {
    result.skip_reason = too_large(g.order(), budget.max_vertices);
    return result;
  }
  CliqueSearch search(g, budget.time_budget_seconds);
  if (!search.run()) {
    result.skip_reason = kTimeout;
    return result;
  }
  result.outcome = OracleOutcome::kExact;
  result.witness = search.best();
  return result;
}

VertexSetResult max_independent_exact(const Graph& g, const OracleBudget& budget) {
  if (g.order() > budget.max_vertices) {
    VertexSetResult result;
    result.skip_reason = too_large(g.order(), budget.max_vertices);
    return result;
  }
  return max_clique_exact(g.complement(), budget);
}

VertexSetResult max_independent_exact_containing(const Graph& g, Vertex v,
                                                 const OracleBudget& budget) {
  VertexSetResult result;
  if (g.order() > budget.max_vertices) {
    result.skip_reason = too_large(g.order(), budget.max_vertices);
    return result;
  }
  std::vector<Vertex> rest;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != v && !g.adjacent(v, w)) {
      rest.push_back(w);
    }
  }
  result = max_independent_exact(g.induced(rest), budget);
  if (!result.exact()) {
    return result;
  }
  for (auto& w : result.witness) {
    w = rest[w];
  }
  result.witness.push_back(v);
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

MatchingResult max_matching_exact(const Graph& g, const OracleBudget& budget) {
  MatchingResult result;
  if (g.order() > budget.max_vertices) {
    result.skip_reason = too_large(g.order(), budget.max_vertices);
    return result;
  }
  Deadline deadline(budget.time_budget_seconds);
  Blossom blossom(g);
  if (!blossom.run(deadline)) {
    result.skip_reason = kTimeout;
    return result;
  }
  result.outcome = OracleOutcome::kExact;
  result.matching = blossom.matching();
  return result;
}

MatchingResult min_maximal_matching_exact(const Graph& g, const OracleBudget& budget) {
  MatchingResult result;
  if (g.order() > budget.max_vertices) {
    result.skip_reason = too_large(g.order(), budget.max_vertices);
    return result;
  }
  SaturationSearch search(g, budget.time_budget_seconds);
  if (!search.run()) {
    result.skip_reason = kTimeout;
    return result;
  }
  result.outcome = OracleOutcome::kExact;
  result.matching = search.best();
  return result;
}

ConnectivityResult vertex_connectivity_exact(const Graph& g, const OracleBudget& budget) {
  ConnectivityResult result;
  const std::size_t n = g.order();
  if (n > budget.max_vertices) {
    result.skip_reason = too_large(n, budget.max_vertices);
    return result;
  }
  result.outcome = OracleOutcome::kExact;
  if (n <= 1 || !is_connected(g)) {
    result.value = 0;
    return result;
  }
  if (g.size() == n * (n - 1) / 2) {
    result.value = n - 1;
    return result;
  }
  Deadline deadline(budget.time_budget_seconds);
  // A non-complete graph has a separator of size at most n - 2.
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    std::vector<Vertex> combo(k);
    std::iota(combo.begin(), combo.end(), Vertex{0});
    do {
      if (deadline.expired()) {
        result.outcome = OracleOutcome::kSkipped;
        result.skip_reason = kTimeout;
        return result;
      }
      std::vector<bool> removed(n, false);
      for (const Vertex v : combo) {
        removed[v] = true;
      }
      if (!is_connected_without(g, removed)) {
        result.value = k;
        result.separator = combo;
        return result;
      }
    } while (next_combination(combo, n));
  }
  result.value = n - 1;
  return result;
}

ConnectivityResult edge_connectivity_exact(const Graph& g, const OracleBudget& budget) {
  ConnectivityResult result;
  const std::size_t n = g.order();
  if (n > budget.max_vertices) {
    result.skip_reason = too_large(n, budget.max_vertices);
    return result;
  }
  result.outcome = OracleOutcome::kExact;
  if (n <= 1 || !is_connected(g)) {
    result.value = 0;
    return result;
  }
  Deadline deadline(budget.time_budget_seconds);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
  }
  // Low-degree sinks first: a connected graph has lambda >= 1, so a flow of 1
  // ends the search.
  std::vector<Vertex> sinks(n - 1);
  std::iota(sinks.begin(), sinks.end(), Vertex{1});
  std::stable_sort(sinks.begin(), sinks.end(),
                   [&](Vertex a, Vertex b) { return adj[a].size() < adj[b].size(); });
  std::size_t best = SIZE_MAX;
  for (const Vertex t : sinks) {
    if (best <= 1) {
      break;
    }
    if (deadline.expired()) {
      result.outcome = OracleOutcome::kSkipped;
      result.skip_reason = kTimeout;
      return result;
    }
    best = std::min(best, unit_max_flow(adj, 0, t));
  }
  result.value = best;
  return result;
}

bool proper_coloring_check(const Graph& g, const std::vector<std::size_t>& colors,
                           std::size_t claimed_colors) {
  if (colors.size() != g.order()) {
    return false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) {
      return false;
    }
  }
  const std::set<std::size_t> distinct(colors.begin(), colors.end());
  return distinct.size() == claimed_colors;
}

}  // namespace zdg
