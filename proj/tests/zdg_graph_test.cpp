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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "reference.hpp"
#include "zdg/classes.hpp"
#include "zdg/errors.hpp"
#include "zdg/invariants.hpp"

namespace zdg {
namespace {

TEST(BuildExplicit, SmallCases) {
  const auto g2 = build_explicit(2);
  EXPECT_EQ(g2.order(), 7u);
  EXPECT_EQ(g2.size(), 7u);
  const auto g3 = build_explicit(3);
  EXPECT_EQ(g3.order(), 31u);
  EXPECT_EQ(g3.size(), 61u);
}

TEST(BuildExplicit, TrivialRing) {
  const auto g = build_explicit(1);
  ASSERT_EQ(g.order(), 1u);
  EXPECT_EQ(g.size(), 0u);
  EXPECT_EQ(g.element(0), GaussianMod::make(1, 1, 1));
}

TEST(BuildExplicit, OnePointUnionOfTriangleAndFourEdges) {
  const auto g = build_explicit(2);
  const Vertex hub = *g.find(GaussianMod::make(2, 2, 2));
  EXPECT_EQ(g.adjacency().degree(hub), 6u);
  int pendants = 0;
  int triangle = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == hub) {
      continue;
    }
    const auto d = g.adjacency().degree(v);
    pendants += d == 1 ? 1 : 0;
    triangle += d == 2 ? 1 : 0;
  }
  EXPECT_EQ(pendants, 4);
  EXPECT_EQ(triangle, 2);
  EXPECT_TRUE(g.adjacency().adjacent(*g.find(GaussianMod::make(2, 0, 2)), *g.find(GaussianMod::make(2, 2, 0))));
}

TEST(BuildExplicit, RespectsCap) {
  BuildOptions opts;
  opts.max_exponent = 3;
  EXPECT_THROW(build_explicit(4, opts), ResourceError);
  EXPECT_THROW(build_explicit(0), DomainError);
}

TEST(BuildExplicit, ClassMajorVertexOrder) {
  const auto g = build_explicit(3);
  const auto p = build_partition(3);
  Vertex v = 0;
  for (const auto& c : p.classes()) {
    EXPECT_EQ(g.class_begin(c.j), v);
    EXPECT_EQ(g.class_size(c.j), c.members.size());
    for (std::size_t k = 0; k < c.members.size(); ++k, ++v) {
      EXPECT_EQ(g.element(v), c.members[k]);
      EXPECT_EQ(g.member(c.j, k + 1), v);
      EXPECT_EQ(g.class_index(v), c.j);
    }
  }
}

class ExplicitProperties : public ::testing::TestWithParam<int> {};

TEST_P(ExplicitProperties, AdjacencyMatchesIndependentProducts) {
  const int n = GetParam();
  const auto g = build_explicit(n);
  std::vector<ref::Elem> vs;
  for (const auto& x : g.vertices()) {
    vs.push_back({static_cast<std::int64_t>(x.re()), static_cast<std::int64_t>(x.im())});
  }
  const auto adj = ref::product_adjacency(n, vs);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      ASSERT_EQ(g.adjacency().adjacent(u, v), adj[u][v]) << u << "," << v;
    }
  }
  EXPECT_EQ(multiplication_adjacency(g.vertices()), g.adjacency());
}

TEST_P(ExplicitProperties, DegreesAndEdgePartition) {
  const int n = GetParam();
  const auto g = build_explicit(n);
  std::size_t degree_sum = 0;
  std::size_t max_count = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = g.adjacency().degree(v);
    degree_sum += d;
    EXPECT_EQ(static_cast<Int>(d), degree_formula(n, g.class_index(v)));
    EXPECT_GE(d, 1u);
    if (d == g.order() - 1) {
      ++max_count;
      const std::int64_t half = std::int64_t{1} << (n - 1);
      EXPECT_EQ(g.element(v), GaussianMod::make(n, half, half));
    }
  }
  EXPECT_EQ(max_count, 1u);
  EXPECT_EQ(degree_sum, 2 * g.size());
  const auto parts = g.edge_partition();
  EXPECT_EQ(static_cast<Int>(parts.lambda_lambda), lambda_lambda_edges_formula(n));
  EXPECT_EQ(static_cast<Int>(parts.lambda_omega), lambda_omega_edges_formula(n));
  for (const auto& [u, v] : g.adjacency().edges()) {
    EXPECT_NE(g.edge_kind(u, v), EdgeKind::kNone);
    EXPECT_TRUE(g.in_lambda(u) || g.in_lambda(v));
  }
}

TEST_P(ExplicitProperties, ExpandJoinIsIdentical) {
  const int n = GetParam();
  const auto compressed = build_compressed(n);
  EXPECT_EQ(compressed.node_count(), static_cast<std::size_t>(2 * n - 1));
  EXPECT_EQ(compressed.edge_count(), static_cast<std::size_t>(n * n - n));
  const auto explicit_graph = build_explicit(n);
  EXPECT_TRUE(expand_join(compressed, build_partition(n)) == explicit_graph);
  std::vector<std::size_t> sizes;
  for (int j = 1; j <= 2 * n - 1; ++j) {
    sizes.push_back(std::size_t{1} << (j - 1));
  }
  const auto from_sizes = expand_join(compressed, sizes);
  EXPECT_EQ(from_sizes.adjacency(), explicit_graph.adjacency());
  EXPECT_EQ(from_sizes.class_size(1), 1u);
  EXPECT_EQ(from_sizes.adjacency().degree(0), from_sizes.order() - 1);
}

INSTANTIATE_TEST_SUITE_P(Exponents, ExplicitProperties, ::testing::Values(2, 3, 4, 5));

TEST(BuildExplicit, DegreesThroughNSix) {
  const auto g = build_explicit(6);
  for (Vertex v = 0; v < g.order(); ++v) {
    ASSERT_EQ(static_cast<Int>(g.adjacency().degree(v)), degree_formula(6, g.class_index(v)));
  }
  EXPECT_EQ(static_cast<Int>(g.size()), size_formula(6));
}

TEST(BuildExplicit, AuditModeAgrees) {
  BuildOptions opts;
  opts.audit = AuditMode::kOn;
  EXPECT_NO_THROW(build_explicit(5, opts));
}

TEST(BuildCompressed, Examples) {
  EXPECT_EQ(build_compressed(2).edge_count(), 2u);
  EXPECT_EQ(build_compressed(3).edge_count(), 6u);
  const auto c5 = build_compressed(5);
  EXPECT_EQ(c5.node_count(), 9u);
  EXPECT_EQ(c5.edge_count(), 20u);
  EXPECT_TRUE(c5.self_annihilating(5));
  EXPECT_FALSE(c5.self_annihilating(6));
  EXPECT_TRUE(c5.adjacent(1, 9));
  EXPECT_FALSE(c5.adjacent(2, 9));
  EXPECT_THROW(build_compressed(1), DomainError);
}

TEST(ExpandJoin, RejectsWrongSizes) {
  const auto c = build_compressed(2);
  const std::vector<std::size_t> wrong{1, 2, 3};
  const std::vector<std::size_t> short_list{1, 2};
  EXPECT_THROW(expand_join(c, wrong), DomainError);
  EXPECT_THROW(expand_join(c, short_list), DomainError);
}

TEST(ZdgGraph, FindAndEdgeKinds) {
  const auto g = build_explicit(2);
  EXPECT_FALSE(g.find(GaussianMod::make(2, 1, 0)).has_value());
  const Vertex a = *g.find(GaussianMod::make(2, 2, 2));
  const Vertex b = *g.find(GaussianMod::make(2, 0, 2));
  const Vertex c = *g.find(GaussianMod::make(2, 1, 1));
  const Vertex d = *g.find(GaussianMod::make(2, 3, 1));
  EXPECT_EQ(g.edge_kind(a, b), EdgeKind::kLambdaLambda);
  EXPECT_EQ(g.edge_kind(a, c), EdgeKind::kLambdaOmega);
  EXPECT_EQ(g.edge_kind(c, d), EdgeKind::kNone);
}

}  // namespace
}  // namespace zdg
