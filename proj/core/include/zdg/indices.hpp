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

#include <vector>

#include "zdg/graph.hpp"
#include "zdg/integer.hpp"

namespace zdg {

/// Class-level distance table: entry (j, j') is the distance between any
/// member of V_{d_j} and any distinct member of V_{d_{j'}}. Diagonal entries
/// are 1 for j <= n and 2 for j > n.
class BlockDistanceMatrix {
 public:
  explicit BlockDistanceMatrix(int n);

  int n() const { return n_; }
  int class_count() const { return 2 * n_ - 1; }
  /// 1-based class indices.
  int at(int j, int j_prime) const;

  /// Distance between the vertex at position k of class j and position k'
  /// of class j' (0 on the diagonal of the expanded matrix).
  int expanded(int j, std::size_t k, int j_prime, std::size_t k_prime) const;

 private:
  int n_;
  std::vector<int> block_;
};

// Wiener index. The closed forms require n >= 2.

/// n(2^{2n-1} - 2^{2n}) + (2^{2n+2} - 2^{2n})/3 - (2^{n-1} + 2^{2n+1}) + 2^n + 2^{4n-2} + 1
Int wiener_formula(int n);
/// n(2^{2n-1} - 2^{2n}) + (2^{2n+2} - 2^{2n})/3 + (2^n - 2^{n-1}) + (2^{4n-2} - 2^{2n+1}) + 1
Int wiener_proof_form(int n);

struct WienerParts {
  Int cross = 0;  // pairs in different classes
  Int intra = 0;  // pairs inside one class
  Int total() const { return cross + intra; }
};

/// O(n^2) sum over class blocks of the distance table.
WienerParts wiener_block_parts(int n);
Int wiener_block(int n);

/// The cross-class sum written with explicit exponent ranges: ones above the
/// diagonal, then the twos.
Int wiener_cross_sum_series(int n);
/// (2^{2n-1} - 2)/3 + (2^{4n-2} - 2^{2n})/3 - 2^{n-1} + 1 - 2^{2n-1} + 2^n
Int wiener_intra_closed_form(int n);

// Zagreb and Randic indices.

/// 2^{4n-1} + 2^{n+2} + 2^{2n-1} - (4 + n 2^{2n+1} + n 2^{2n} + 2^n)
Int zagreb1_formula(int n);
/// sum_j |V_j| deg_j^2
Int zagreb1_class_sum(int n);

/// The published double sum. It covers edges between distinct classes only.
Int zagreb2_published(int n);
/// sum_{j=2}^{n} C(2^{j-1}, 2) (2^{2n-j} - 2)^2, the edges inside Lambda classes.
Int zagreb2_correction(int n);
Int zagreb2_full(int n);

double randic_published(int n);
/// sum_{j=2}^{n} C(2^{j-1}, 2) / (2^{2n-j} - 2)
double randic_correction(int n);
double randic_full(int n);

struct IndexOracleValues {
  bool connected = false;
  Int wiener = 0;
  Int zagreb1 = 0;
  Int zagreb2 = 0;
  double randic = 0.0;
};

/// Vertex-level sums straight from the definitions: BFS distances, degrees
/// and a compensated edge sum for Randic. The Wiener value is left at 0 when
/// the graph is disconnected or `with_distances` is false.
IndexOracleValues index_oracles(const Graph& g, bool with_distances = true);

}  // namespace zdg
