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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zdg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph over vertices 0..order-1. Adjacency is a packed
/// symmetric bit matrix, one row of 64-bit words per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  std::size_t order() const { return order_; }
  /// Number of edges.
  std::size_t size() const { return edges_; }
  std::size_t words_per_row() const { return words_; }

  /// Idempotent; self-loops are rejected with DomainError.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph complement() const;
  /// Subgraph induced on `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.bits_ == b.bits_;
  }

 private:
  std::uint64_t* row_ptr(Vertex v) { return bits_.data() + v * words_; }
  const std::uint64_t* row_ptr(Vertex v) const { return bits_.data() + v * words_; }

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Plain BFS reachability test; the empty graph counts as connected.
bool is_connected(const Graph& g);

/// Connectivity after deleting the vertices flagged in `removed`.
bool is_connected_without(const Graph& g, const std::vector<bool>& removed);

bool is_clique(const Graph& g, std::span<const Vertex> vertices);
bool is_independent_set(const Graph& g, std::span<const Vertex> vertices);
/// Pairwise disjoint endpoints and every pair an edge of g.
bool is_matching(const Graph& g, std::span<const Edge> matching);
/// A matching to which no edge of g can be added.
bool is_maximal_matching(const Graph& g, std::span<const Edge> matching);

}  // namespace zdg
