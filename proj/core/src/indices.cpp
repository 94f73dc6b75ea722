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

#include "zdg/indices.hpp"

#include <cmath>
#include <string>

#include "zdg/classes.hpp"
#include "zdg/errors.hpp"
#include "zdg/invariants.hpp"
#include "zdg/oracles.hpp"

namespace zdg {

namespace {

void require_n(int n, const char* what) {
  if (n < 2 || n > kMaxFormulaExponent) {
    throw DomainError(std::string(what) + " requires 2 <= n <= 16, got " + std::to_string(n));
  }
}

Int exact_third(Int value, const char* what) {
  if (value % 3 != 0) {
    throw VerificationError(std::string(what) + ": non-integral third of " + to_string(value));
  }
  return value / 3;
}

Int class_size(int j) { return pow2(j - 1); }

Int choose2(Int m) { return m * (m - 1) / 2; }

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace

BlockDistanceMatrix::BlockDistanceMatrix(int n) : n_(n) {
  require_n(n, "BlockDistanceMatrix");
  const int c = class_count();
  block_.resize(static_cast<std::size_t>(c * c));
  for (int j = 1; j <= c; ++j) {
    for (int jp = 1; jp <= c; ++jp) {
      int d = classes_adjacent(n, j, jp) ? 1 : 2;
      if (j == jp) {
        d = j <= n ? 1 : 2;
      }
      block_[static_cast<std::size_t>((j - 1) * c + (jp - 1))] = d;
    }
  }
}

int BlockDistanceMatrix::at(int j, int j_prime) const {
  const int c = class_count();
  if (j < 1 || j > c || j_prime < 1 || j_prime > c) {
    throw DomainError("BlockDistanceMatrix: class index out of range");
  }
  return block_[static_cast<std::size_t>((j - 1) * c + (j_prime - 1))];
}

int BlockDistanceMatrix::expanded(int j, std::size_t k, int j_prime, std::size_t k_prime) const {
  if (j == j_prime && k == k_prime) {
    return 0;
  }
  return at(j, j_prime);
}

Int wiener_formula(int n) {
  require_n(n, "wiener_formula");
  return Int{n} * (pow2(2 * n - 1) - pow2(2 * n)) +
         exact_third(pow2(2 * n + 2) - pow2(2 * n), "wiener_formula") -
         (pow2(n - 1) + pow2(2 * n + 1)) + pow2(n) + pow2(4 * n - 2) + 1;
}

Int wiener_proof_form(int n) {
  require_n(n, "wiener_proof_form");
  return Int{n} * (pow2(2 * n - 1) - pow2(2 * n)) +
         exact_third(pow2(2 * n + 2) - pow2(2 * n), "wiener_proof_form") +
         (pow2(n) - pow2(n - 1)) + (pow2(4 * n - 2) - pow2(2 * n + 1)) + 1;
}

WienerParts wiener_block_parts(int n) {
  const BlockDistanceMatrix d(n);
  WienerParts parts;
  const int c = d.class_count();
  for (int j = 1; j <= c; ++j) {
    for (int jp = j + 1; jp <= c; ++jp) {
      parts.cross += d.at(j, jp) * class_size(j) * class_size(jp);
    }
    // Half of the diagonal block: distance times ordered pairs of distinct members.
    const Int s = class_size(j);
    parts.intra += d.at(j, j) * (s * s - s);
  }
  parts.intra /= 2;
  return parts;
}

Int wiener_block(int n) { return wiener_block_parts(n).total(); }

Int wiener_cross_sum_series(int n) {
  require_n(n, "wiener_cross_sum_series");
  // Exponents are 0-based: class j + 1 has 2^j members.
  Int ones = 0;
  for (int j = 0; j <= n - 2; ++j) {
    for (int jp = j + 1; jp <= 2 * n - 2 - j; ++jp) {
      ones += pow2(j + jp);
    }
  }
  Int twos_lambda = 0;
  for (int j = 1; j <= n - 1; ++j) {
    for (int jp = 2 * n - 1 - j; jp <= 2 * n - 2; ++jp) {
      twos_lambda += pow2(j + jp + 1);
    }
  }
  Int twos_omega = 0;
  for (int j = n; j <= 2 * n - 3; ++j) {
    for (int jp = j + 1; jp <= 2 * n - 2; ++jp) {
      twos_omega += pow2(j + jp + 1);
    }
  }
  return ones + twos_lambda + twos_omega;
}

Int wiener_intra_closed_form(int n) {
  require_n(n, "wiener_intra_closed_form");
  return exact_third(pow2(2 * n - 1) - 2, "wiener_intra_closed_form") +
         exact_third(pow2(4 * n - 2) - pow2(2 * n), "wiener_intra_closed_form") - pow2(n - 1) + 1 -
         pow2(2 * n - 1) + pow2(n);
}

Int zagreb1_formula(int n) {
  require_n(n, "zagreb1_formula");
  return pow2(4 * n - 1) + pow2(n + 2) + pow2(2 * n - 1) -
         (4 + Int{n} * pow2(2 * n + 1) + Int{n} * pow2(2 * n) + pow2(n));
}

Int zagreb1_class_sum(int n) {
  require_n(n, "zagreb1_class_sum");
  Int sum = 0;
  for (int j = 1; j <= 2 * n - 1; ++j) {
    const Int d = degree_formula(n, j);
    sum += class_size(j) * d * d;
  }
  return sum;
}

Int zagreb2_published(int n) {
  require_n(n, "zagreb2_published");
  Int total = 0;
  for (int k = 1; k <= n - 1; ++k) {
    Int inner = 0;
    for (int j = k + 1; j <= n; ++j) {
      inner += pow2(2 * n - 1) - pow2(j);
      inner += pow2(2 * n - 1) - pow2(n + j - (k + 1));
    }
    total += pow2(k - 1) * (pow2(2 * n - k) - 2) * inner;
  }
  return total;
}

Int zagreb2_correction(int n) {
  require_n(n, "zagreb2_correction");
  Int total = 0;
  for (int j = 2; j <= n; ++j) {
    const Int d = pow2(2 * n - j) - 2;
    total += choose2(class_size(j)) * d * d;
  }
  return total;
}

Int zagreb2_full(int n) { return zagreb2_published(n) + zagreb2_correction(n); }

double randic_published(int n) {
  require_n(n, "randic_published");
  CompensatedSum total;
  for (int k = 1; k <= n - 1; ++k) {
    const double outer =
        std::ldexp(1.0, k - 1) / std::sqrt(std::ldexp(1.0, 2 * n - k) - 2.0);
    for (int j = k + 1; j <= n; ++j) {
      total.add(outer * std::ldexp(1.0, j - 1) / std::sqrt(std::ldexp(1.0, 2 * n - j) - 2.0));
    }
    for (int j = 1; j <= n - k; ++j) {
      total.add(outer * std::ldexp(1.0, n + j - 1) / std::sqrt(std::ldexp(1.0, n - j) - 1.0));
    }
  }
  return total.value();
}

double randic_correction(int n) {
  require_n(n, "randic_correction");
  CompensatedSum total;
  for (int j = 2; j <= n; ++j) {
    // Both endpoints have degree 2^{2n-j} - 2, so (d d)^{-1/2} = 1/d.
    const double pairs = static_cast<double>(choose2(class_size(j)));
    total.add(pairs / (std::ldexp(1.0, 2 * n - j) - 2.0));
  }
  return total.value();
}

double randic_full(int n) { return randic_published(n) + randic_correction(n); }

IndexOracleValues index_oracles(const Graph& g, bool with_distances) {
  IndexOracleValues out;
  if (with_distances) {
    const auto distances = bfs_distance_sum(g);
    out.connected = distances.has_value();
    out.wiener = distances.value_or(0);
  } else {
    out.connected = is_connected(g);
  }
  std::vector<Int> degree(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    degree[v] = static_cast<Int>(g.degree(v));
    out.zagreb1 += degree[v] * degree[v];
  }
  CompensatedSum randic;
  for (const auto& [u, v] : g.edges()) {
    out.zagreb2 += degree[u] * degree[v];
    randic.add(1.0 / std::sqrt(static_cast<double>(degree[u] * degree[v])));
  }
  out.randic = randic.value();
  return out;
}

}  // namespace zdg
