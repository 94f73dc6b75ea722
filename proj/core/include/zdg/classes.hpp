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
#include <optional>
#include <stdexcept>
#include <vector>

#include "zdg/errors.hpp"
#include "zdg/gaussian.hpp"

namespace zdg {

/// Largest exponent for which annihilator() scans the whole ring.
inline constexpr int kMaxAnnihilatorExponent = 6;

/// Largest exponent for which build_partition() enumerates the ring.
inline constexpr int kMaxPartitionExponent = 12;

/// The associate class V_{d_j}: every unit multiple of d_j = (1+i)^{2n-j}.
struct AssociateClass {
  int j = 0;
  GaussianMod canonical_divisor = GaussianMod::make(1, 0, 0);
  /// Sorted by (norm, re, im); position k - 1 holds the k-th member.
  std::vector<GaussianMod> members;
  /// Every member squares to zero (j <= n).
  bool is_nilpotent_sq = false;
};

/// All nonzero zero-divisors of Z_{2^n}[i], bucketed by class. Classes
/// 1..n form the clique part (Lambda), classes n+1..2n-1 the independent part
/// (Omega).
class ClassPartition {
 public:
  ClassPartition(int n, std::vector<AssociateClass> classes);

  int n() const { return n_; }
  int class_count() const { return 2 * n_ - 1; }

  /// 1-based: at(1) is V_{d_1}.
  const AssociateClass& at(int j) const;
  const std::vector<AssociateClass>& classes() const { return classes_; }

  std::size_t total_members() const;

  bool in_lambda(int j) const { return j >= 1 && j <= n_; }
  bool in_omega(int j) const { return j > n_ && j <= 2 * n_ - 1; }

 private:
  int n_;
  std::vector<AssociateClass> classes_;
};

/// Why class_of() refused an element.
enum class NotZeroDivisorReason { kUnit, kZero };

class NotAZeroDivisor : public DomainError {
 public:
  NotAZeroDivisor(NotZeroDivisorReason reason, const std::string& what)
      : DomainError(what), reason_(reason) {}
  NotZeroDivisorReason reason() const { return reason_; }

 private:
  NotZeroDivisorReason reason_;
};

/// (1+i)^{2n-j} reduced mod 2^n. Requires 1 <= j <= 2n - 1.
GaussianMod canonical_divisor(int n, int j);

/// 2n - valuation(x). Throws NotAZeroDivisor for units and for zero.
int class_of(const GaussianMod& x);

/// Requires 2 <= n <= kMaxPartitionExponent.
ClassPartition build_partition(int n);

/// Smallest k >= 1 with x^k = 0; nullopt when x is not nilpotent.
std::optional<int> nilpotency_index(const GaussianMod& x);

/// Sum of the Lambda class sizes. Throws VerificationError unless it is 2^n - 1.
std::uint64_t count_nilpotent_index2(const ClassPartition& partition);

/// d_j d_{j'} = 0, which by valuations is j + j' <= 2n.
bool classes_adjacent(int n, int j, int j_prime);

/// Every y with xy = 0, in (re, im) order. Throws ResourceError above
/// kMaxAnnihilatorExponent.
std::vector<GaussianMod> annihilator(const GaussianMod& x);

}  // namespace zdg
