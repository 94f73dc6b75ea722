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

#include <benchmark/benchmark.h>

#include "zdg/indices.hpp"
#include "zdg/oracles.hpp"
#include "zdg/zdg_graph.hpp"

namespace {

void BM_WienerBlock(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zdg::wiener_block(n));
  }
}
BENCHMARK(BM_WienerBlock)->DenseRange(2, 6);

void BM_WienerBfs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graph = zdg::build_explicit(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zdg::bfs_distance_sum(graph.adjacency()));
  }
}
BENCHMARK(BM_WienerBfs)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_AdjacencyRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  zdg::BuildOptions opts;
  opts.audit = zdg::AuditMode::kOff;
  for (auto _ : state) {
    benchmark::DoNotOptimize(zdg::build_explicit(n, opts));
  }
}
BENCHMARK(BM_AdjacencyRule)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_AdjacencyMultiplication(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graph = zdg::build_explicit(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zdg::multiplication_adjacency(graph.vertices()));
  }
}
BENCHMARK(BM_AdjacencyMultiplication)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_MaxMatching(benchmark::State& state) {
  const auto graph = zdg::build_explicit(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(zdg::max_matching_exact(graph.adjacency()));
  }
}
BENCHMARK(BM_MaxMatching)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
