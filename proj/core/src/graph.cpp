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

#include "zdg/graph.hpp"

#include <bit>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

constexpr std::size_t kWordBits = 64;

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v % kWordBits); }

}  // namespace

Graph::Graph(std::size_t order)
    : order_(order), words_((order + kWordBits - 1) / kWordBits), bits_(order * words_, 0) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order_ || v >= order_) {
    throw DomainError("add_edge: vertex out of range");
  }
  if (u == v) {
    throw DomainError("add_edge: self-loop at vertex " + std::to_string(u));
  }
  if (adjacent(u, v)) {
    return;
  }
  row_ptr(u)[v / kWordBits] |= bit(v);
  row_ptr(v)[u / kWordBits] |= bit(u);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (!adjacent(u, v)) {
    return;
  }
  row_ptr(u)[v / kWordBits] &= ~bit(v);
  row_ptr(v)[u / kWordBits] &= ~bit(u);
  --edges_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) {
    return false;
  }
  return (row_ptr(u)[v / kWordBits] & bit(v)) != 0;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto w : row(v)) {
    d += static_cast<std::size_t>(std::popcount(w));
  }
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word != 0) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const { return {row_ptr(v), words_}; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order_; ++u) {
    for (const Vertex v : neighbors(u)) {
      if (u < v) {
        out.emplace_back(u, v);
      }
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph c(order_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v = u + 1; v < order_; ++v) {
      if (!adjacent(u, v)) {
        c.add_edge(u, v);
      }
    }
  }
  return c;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  Graph sub(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (adjacent(keep[a], keep[b])) {
        sub.add_edge(a, b);
      }
    }
  }
  return sub;
}

bool is_connected_without(const Graph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack;
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (stack.empty()) {
        stack.push_back(v);
        seen[v] = true;
      }
    }
  }
  std::size_t reached = stack.size();
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const Vertex w : g.neighbors(u)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

bool is_connected(const Graph& g) { return is_connected_without(g, std::vector<bool>(g.order())); }

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (!g.adjacent(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a] == vertices[b] || g.adjacent(vertices[a], vertices[b])) {
        return false;
      }
    }
  }
  return true;
}

bool is_matching(const Graph& g, std::span<const Edge> matching) {
  std::vector<bool> used(g.order(), false);
  for (const auto& [u, v] : matching) {
    if (!g.adjacent(u, v) || used[u] || used[v]) {
      return false;
    }
    used[u] = used[v] = true;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, std::span<const Edge> matching) {
  if (!is_matching(g, matching)) {
    return false;
  }
  std::vector<bool> used(g.order(), false);
  for (const auto& [u, v] : matching) {
    used[u] = used[v] = true;
  }
  for (const auto& [u, v] : g.edges()) {
    if (!used[u] && !used[v]) {
      return false;
    }
  }
  return true;
}

}  // namespace zdg
