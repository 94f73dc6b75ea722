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

#include "zdg/classes.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

namespace zdg {

ClassPartition::ClassPartition(int n, std::vector<AssociateClass> classes)
    : n_(n), classes_(std::move(classes)) {
  if (static_cast<int>(classes_.size()) != 2 * n_ - 1) {
    throw DomainError("ClassPartition: expected 2n-1 classes");
  }
}

const AssociateClass& ClassPartition::at(int j) const {
  if (j < 1 || j > class_count()) {
    throw DomainError("class index " + std::to_string(j) + " outside [1, " +
                      std::to_string(class_count()) + "]");
  }
  return classes_[static_cast<std::size_t>(j - 1)];
}

std::size_t ClassPartition::total_members() const {
  std::size_t total = 0;
  for (const auto& c : classes_) {
    total += c.members.size();
  }
  return total;
}

GaussianMod canonical_divisor(int n, int j) {
  if (n < 1 || j < 1 || j > 2 * n - 1) {
    throw DomainError("canonical_divisor: class index " + std::to_string(j) +
                      " outside [1, 2n-1] for n = " + std::to_string(n));
  }
  const GaussianMod one_plus_i = GaussianMod::make(n, 1, 1);
  GaussianMod d = GaussianMod::make(n, 1, 0);
  for (int e = 0; e < 2 * n - j; ++e) {
    d = mul(d, one_plus_i);
  }
  return d;
}

int class_of(const GaussianMod& x) {
  if (x.is_zero()) {
    throw NotAZeroDivisor(NotZeroDivisorReason::kZero, "class_of: zero has no associate class");
  }
  if (is_unit(x)) {
    throw NotAZeroDivisor(NotZeroDivisorReason::kUnit,
                          "class_of: " + to_string(x) + " is a unit");
  }
  return 2 * x.exponent() - *valuation(x);
}

ClassPartition build_partition(int n) {
  if (n < 2) {
    throw DomainError("build_partition requires n > 1, got " + std::to_string(n));
  }
  if (n > kMaxPartitionExponent) {
    throw ResourceError("build_partition: n = " + std::to_string(n) +
                        " exceeds the enumeration cap of " +
                        std::to_string(kMaxPartitionExponent));
  }
  std::vector<AssociateClass> classes(static_cast<std::size_t>(2 * n - 1));
  for (int j = 1; j <= 2 * n - 1; ++j) {
    auto& c = classes[static_cast<std::size_t>(j - 1)];
    c.j = j;
    c.canonical_divisor = canonical_divisor(n, j);
    c.is_nilpotent_sq = j <= n;
    c.members.reserve(std::size_t{1} << (j - 1));
  }
  const std::int64_t m = std::int64_t{1} << n;
  for (std::int64_t a = 0; a < m; ++a) {
    // Non-units have a + b even.
    for (std::int64_t b = a & 1; b < m; b += 2) {
      const GaussianMod x = GaussianMod::make(n, a, b);
      if (x.is_zero()) {
        continue;
      }
      classes[static_cast<std::size_t>(class_of(x) - 1)].members.push_back(x);
    }
  }
  for (auto& c : classes) {
    std::sort(c.members.begin(), c.members.end(), [](const GaussianMod& l, const GaussianMod& r) {
      return std::make_tuple(norm(l), l.re(), l.im()) < std::make_tuple(norm(r), r.re(), r.im());
    });
  }
  return ClassPartition(n, std::move(classes));
}

std::optional<int> nilpotency_index(const GaussianMod& x) {
  // A nilpotent x has valuation >= 1, so x^{2n} = 0 at the latest.
  GaussianMod power = x;
  for (int k = 1; k <= 2 * x.exponent(); ++k) {
    if (power.is_zero()) {
      return k;
    }
    power = mul(power, x);
  }
  return std::nullopt;
}

std::uint64_t count_nilpotent_index2(const ClassPartition& partition) {
  std::uint64_t count = 0;
  for (int j = 1; j <= partition.n(); ++j) {
    count += partition.at(j).members.size();
  }
  const std::uint64_t expected = (std::uint64_t{1} << partition.n()) - 1;
  if (count != expected) {
    throw VerificationError("count_nilpotent_index2: got " + std::to_string(count) +
                            ", expected 2^n - 1 = " + std::to_string(expected));
  }
  return count;
}

bool classes_adjacent(int n, int j, int j_prime) {
  if (j < 1 || j > 2 * n - 1 || j_prime < 1 || j_prime > 2 * n - 1) {
    throw DomainError("classes_adjacent: class index outside [1, 2n-1]");
  }
  return j + j_prime <= 2 * n;
}

std::vector<GaussianMod> annihilator(const GaussianMod& x) {
  const int n = x.exponent();
  if (n > kMaxAnnihilatorExponent) {
    throw ResourceError("annihilator: exhaustive scan refused for n = " + std::to_string(n) +
                        " (cap " + std::to_string(kMaxAnnihilatorExponent) + ")");
  }
  std::vector<GaussianMod> result;
  const std::int64_t m = std::int64_t{1} << n;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      const GaussianMod y = GaussianMod::make(n, a, b);
      if (mul(x, y).is_zero()) {
        result.push_back(y);
      }
    }
  }
  return result;
}

}  // namespace zdg
