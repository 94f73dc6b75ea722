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

#include "zdg/zdg_graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "zdg/errors.hpp"

namespace zdg {

ZdgGraph::ZdgGraph(int n, std::vector<GaussianMod> vertices,
                   std::vector<std::size_t> class_offsets, Graph adjacency)
    : n_(n),
      vertices_(std::move(vertices)),
      class_offsets_(std::move(class_offsets)),
      adjacency_(std::move(adjacency)) {
  if (class_offsets_.size() < 2 || class_offsets_.front() != 0 ||
      class_offsets_.back() != vertices_.size() ||
      !std::is_sorted(class_offsets_.begin(), class_offsets_.end())) {
    throw DomainError("ZdgGraph: malformed class offsets");
  }
  if (adjacency_.order() != vertices_.size()) {
    throw DomainError("ZdgGraph: adjacency order does not match vertex count");
  }
}

int ZdgGraph::class_index(Vertex v) const {
  if (v >= vertices_.size()) {
    throw DomainError("class_index: vertex out of range");
  }
  const auto it = std::upper_bound(class_offsets_.begin(), class_offsets_.end(), v);
  return static_cast<int>(it - class_offsets_.begin());
}

std::size_t ZdgGraph::class_size(int j) const {
  if (j < 1 || j > class_count()) {
    throw DomainError("class_size: class index out of range");
  }
  const auto k = static_cast<std::size_t>(j);
  return class_offsets_[k] - class_offsets_[k - 1];
}

Vertex ZdgGraph::class_begin(int j) const {
  if (j < 1 || j > class_count()) {
    throw DomainError("class_begin: class index out of range");
  }
  return class_offsets_[static_cast<std::size_t>(j - 1)];
}

Vertex ZdgGraph::member(int j, std::size_t k) const {
  if (k < 1 || k > class_size(j)) {
    throw DomainError("member: position " + std::to_string(k) + " outside class " +
                      std::to_string(j));
  }
  return class_begin(j) + k - 1;
}

std::optional<Vertex> ZdgGraph::find(const GaussianMod& x) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), x);
  if (it == vertices_.end()) {
    return std::nullopt;
  }
  return static_cast<Vertex>(it - vertices_.begin());
}

EdgeKind ZdgGraph::edge_kind(Vertex u, Vertex v) const {
  if (!adjacency_.adjacent(u, v)) {
    return EdgeKind::kNone;
  }
  const bool lu = in_lambda(u);
  const bool lv = in_lambda(v);
  if (lu && lv) {
    return EdgeKind::kLambdaLambda;
  }
  if (lu || lv) {
    return EdgeKind::kLambdaOmega;
  }
  throw VerificationError("edge between two Omega vertices");
}

EdgePartitionCounts ZdgGraph::edge_partition() const {
  EdgePartitionCounts counts;
  for (const auto& [u, v] : adjacency_.edges()) {
    switch (edge_kind(u, v)) {
      case EdgeKind::kLambdaLambda:
        ++counts.lambda_lambda;
        break;
      case EdgeKind::kLambdaOmega:
        ++counts.lambda_omega;
        break;
      case EdgeKind::kNone:
        break;
    }
  }
  return counts;
}

CompressedGraph::CompressedGraph(int n, Graph adjacency, std::vector<bool> self_annihilating)
    : n_(n), adjacency_(std::move(adjacency)), self_annihilating_(std::move(self_annihilating)) {
  if (self_annihilating_.size() != adjacency_.order()) {
    throw DomainError("CompressedGraph: flag count does not match node count");
  }
}

Graph multiplication_adjacency(std::span<const GaussianMod> vertices) {
  Graph g(vertices.size());
  for (Vertex u = 0; u < vertices.size(); ++u) {
    for (Vertex v = u + 1; v < vertices.size(); ++v) {
      if (mul(vertices[u], vertices[v]).is_zero()) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

namespace {

struct Layout {
  std::vector<GaussianMod> vertices;
  std::vector<std::size_t> offsets;
};

Layout class_major_layout(const ClassPartition& partition) {
  Layout layout;
  layout.vertices.reserve(partition.total_members());
  layout.offsets.push_back(0);
  for (const auto& c : partition.classes()) {
    layout.vertices.insert(layout.vertices.end(), c.members.begin(), c.members.end());
    layout.offsets.push_back(layout.vertices.size());
  }
  return layout;
}

void join_blocks(Graph& g, const Layout& layout, int j, int j_prime) {
  const auto ju = static_cast<std::size_t>(j);
  const auto jv = static_cast<std::size_t>(j_prime);
  for (Vertex u = layout.offsets[ju - 1]; u < layout.offsets[ju]; ++u) {
    for (Vertex v = layout.offsets[jv - 1]; v < layout.offsets[jv]; ++v) {
      if (u != v) {
        g.add_edge(u, v);
      }
    }
  }
}

bool should_audit(AuditMode mode, int n) {
  switch (mode) {
    case AuditMode::kOn:
      return true;
    case AuditMode::kOff:
      return false;
    case AuditMode::kAuto:
      return n <= 4;
  }
  return false;
}

}  // namespace

ZdgGraph build_explicit(int n, const BuildOptions& options) {
  if (n < 1) {
    throw DomainError("build_explicit requires n >= 1, got " + std::to_string(n));
  }
  if (n > options.max_exponent) {
    throw ResourceError("build_explicit: n = " + std::to_string(n) +
                        " exceeds the explicit-graph cap of " +
                        std::to_string(options.max_exponent));
  }
  if (n == 1) {
    // Z_2[i] has the single zero-divisor 1+i, so the graph is K_1.
    return ZdgGraph(1, {GaussianMod::make(1, 1, 1)}, {0, 1}, Graph(1));
  }
  const ClassPartition partition = build_partition(n);
  const Layout layout = class_major_layout(partition);
  Graph g(layout.vertices.size());
  for (int j = 1; j <= 2 * n - 1; ++j) {
    for (int jp = j; jp <= 2 * n - 1; ++jp) {
      if (classes_adjacent(n, j, jp)) {
        join_blocks(g, layout, j, jp);
      }
    }
  }
  if (should_audit(options.audit, n) && multiplication_adjacency(layout.vertices) != g) {
    throw VerificationError("build_explicit: class-rule adjacency disagrees with ring products");
  }
  return ZdgGraph(n, layout.vertices, layout.offsets, std::move(g));
}

CompressedGraph build_compressed(int n) {
  if (n < 2) {
    throw DomainError("build_compressed requires n > 1, got " + std::to_string(n));
  }
  const int nodes = 2 * n - 1;
  Graph g(static_cast<std::size_t>(nodes));
  std::vector<bool> self(static_cast<std::size_t>(nodes));
  for (int j = 1; j <= nodes; ++j) {
    self[static_cast<std::size_t>(j - 1)] = classes_adjacent(n, j, j);
    for (int jp = j + 1; jp <= nodes; ++jp) {
      if (classes_adjacent(n, j, jp)) {
        g.add_edge(static_cast<Vertex>(j - 1), static_cast<Vertex>(jp - 1));
      }
    }
  }
  return CompressedGraph(n, std::move(g), std::move(self));
}

ZdgGraph expand_join(const CompressedGraph& compressed, const ClassPartition& partition) {
  if (partition.n() != compressed.n() ||
      static_cast<std::size_t>(partition.class_count()) != compressed.node_count()) {
    throw DomainError("expand_join: partition does not match the compressed graph");
  }
  const Layout layout = class_major_layout(partition);
  Graph g(layout.vertices.size());
  const int nodes = partition.class_count();
  for (int j = 1; j <= nodes; ++j) {
    if (compressed.self_annihilating(j)) {
      join_blocks(g, layout, j, j);
    }
    for (int jp = j + 1; jp <= nodes; ++jp) {
      if (compressed.adjacent(j, jp)) {
        join_blocks(g, layout, j, jp);
      }
    }
  }
  return ZdgGraph(compressed.n(), layout.vertices, layout.offsets, std::move(g));
}

ZdgGraph expand_join(const CompressedGraph& compressed, std::span<const std::size_t> class_sizes) {
  if (class_sizes.size() != compressed.node_count()) {
    throw DomainError("expand_join: expected " + std::to_string(compressed.node_count()) +
                      " class sizes, got " + std::to_string(class_sizes.size()));
  }
  for (std::size_t i = 0; i < class_sizes.size(); ++i) {
    if (class_sizes[i] != (std::size_t{1} << i)) {
      throw DomainError("expand_join: class " + std::to_string(i + 1) + " has size " +
                        std::to_string(class_sizes[i]) + ", expected " +
                        std::to_string(std::size_t{1} << i));
    }
  }
  return expand_join(compressed, build_partition(compressed.n()));
}

}  // namespace zdg
