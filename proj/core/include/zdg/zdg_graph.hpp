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
#include <span>
#include <vector>

#include "zdg/classes.hpp"
#include "zdg/gaussian.hpp"
#include "zdg/graph.hpp"

namespace zdg {

/// Default cap on explicit graph construction: n = 8 gives 32767 vertices.
inline constexpr int kDefaultExplicitCap = 8;

/// Edge labels of the Lambda/Omega edge partition. Omega-Omega edges do not
/// exist; kNone is returned for non-edges.
enum class EdgeKind { kNone, kLambdaLambda, kLambdaOmega };

struct EdgePartitionCounts {
  std::size_t lambda_lambda = 0;  // E1
  std::size_t lambda_omega = 0;   // E2
};

/// The zero-divisor graph of Z_{2^n}[i] with vertices in class-major order:
/// V_{d_1} first, then V_{d_2}, ..., each class in its member order.
class ZdgGraph {
 public:
  /// `class_offsets` has 2n entries for n >= 2 (or 2 for n = 1); class j
  /// occupies [class_offsets[j-1], class_offsets[j]).
  ZdgGraph(int n, std::vector<GaussianMod> vertices, std::vector<std::size_t> class_offsets,
           Graph adjacency);

  int n() const { return n_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return adjacency_.size(); }

  const std::vector<GaussianMod>& vertices() const { return vertices_; }
  const GaussianMod& element(Vertex v) const { return vertices_.at(v); }
  const Graph& adjacency() const { return adjacency_; }

  int class_count() const { return static_cast<int>(class_offsets_.size()) - 1; }
  int class_index(Vertex v) const;
  std::size_t class_size(int j) const;
  Vertex class_begin(int j) const;
  /// The k-th member (1-based) of V_{d_j}.
  Vertex member(int j, std::size_t k) const;
  bool in_lambda(Vertex v) const { return class_index(v) <= n_; }

  std::optional<Vertex> find(const GaussianMod& x) const;

  EdgeKind edge_kind(Vertex u, Vertex v) const;
  EdgePartitionCounts edge_partition() const;

  friend bool operator==(const ZdgGraph& a, const ZdgGraph& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.class_offsets_ == b.class_offsets_ &&
           a.adjacency_ == b.adjacency_;
  }

 private:
  int n_;
  std::vector<GaussianMod> vertices_;
  std::vector<std::size_t> class_offsets_;
  Graph adjacency_;
};

/// The compressed graph: one node per associate class, node j - 1 standing
/// for V_{d_j}.
class CompressedGraph {
 public:
  CompressedGraph(int n, Graph adjacency, std::vector<bool> self_annihilating);

  int n() const { return n_; }
  std::size_t node_count() const { return adjacency_.order(); }
  std::size_t edge_count() const { return adjacency_.size(); }
  const Graph& adjacency() const { return adjacency_; }
  /// True when members of class j annihilate each other (j <= n).
  bool self_annihilating(int j) const { return self_annihilating_.at(static_cast<std::size_t>(j - 1)); }
  bool adjacent(int j, int j_prime) const {
    return adjacency_.adjacent(static_cast<Vertex>(j - 1), static_cast<Vertex>(j_prime - 1));
  }

 private:
  int n_;
  Graph adjacency_;
  std::vector<bool> self_annihilating_;
};

enum class AuditMode {
  kAuto,  // audit for n <= 4 only
  kOn,
  kOff,
};

struct BuildOptions {
  AuditMode audit = AuditMode::kAuto;
  int max_exponent = kDefaultExplicitCap;
};

/// Builds the graph from the class adjacency rule. n = 1 yields K_1 on
/// {1+i}. Throws ResourceError above options.max_exponent and
/// VerificationError if the audit finds a disagreement.
ZdgGraph build_explicit(int n, const BuildOptions& options = {});

/// Adjacency recomputed pairwise from ring products: u ~ v iff uv = 0.
Graph multiplication_adjacency(std::span<const GaussianMod> vertices);

/// Requires n >= 2.
CompressedGraph build_compressed(int n);

/// Generalized join: node j becomes K_{|V_j|} when self-annihilating and an
/// edgeless block otherwise; blocks of adjacent nodes are fully joined.
ZdgGraph expand_join(const CompressedGraph& compressed, const ClassPartition& partition);

/// As above; class_sizes[j - 1] must equal 2^{j-1}, else DomainError.
ZdgGraph expand_join(const CompressedGraph& compressed, std::span<const std::size_t> class_sizes);

}  // namespace zdg
