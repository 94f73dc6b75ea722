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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "reference.hpp"
#include "zdg/errors.hpp"

namespace zdg {
namespace {

GaussianMod g(int n, std::int64_t a, std::int64_t b) { return GaussianMod::make(n, a, b); }

TEST(CanonicalDivisor, Examples) {
  EXPECT_EQ(canonical_divisor(2, 3), g(2, 1, 1));
  EXPECT_EQ(canonical_divisor(2, 1), g(2, 2, 2));
  EXPECT_EQ(canonical_divisor(3, 5), g(3, 1, 1));
  EXPECT_THROW(canonical_divisor(3, 6), DomainError);
  EXPECT_THROW(canonical_divisor(3, 0), DomainError);
}

TEST(ClassOf, Examples) {
  EXPECT_EQ(class_of(g(2, 1, 1)), 3);
  EXPECT_EQ(class_of(g(2, 2, 2)), 1);
  EXPECT_EQ(class_of(g(2, 2, 0)), 2);
}

TEST(ClassOf, RejectsUnitsAndZeroDistinctly) {
  try {
    class_of(g(2, 1, 0));
    FAIL() << "unit accepted";
  } catch (const NotAZeroDivisor& e) {
    EXPECT_EQ(e.reason(), NotZeroDivisorReason::kUnit);
  }
  try {
    class_of(g(2, 0, 0));
    FAIL() << "zero accepted";
  } catch (const NotAZeroDivisor& e) {
    EXPECT_EQ(e.reason(), NotZeroDivisorReason::kZero);
  }
}

TEST(BuildPartition, Sizes) {
  const auto p2 = build_partition(2);
  ASSERT_EQ(p2.class_count(), 3);
  EXPECT_EQ(p2.at(1).members.size(), 1u);
  EXPECT_EQ(p2.at(2).members.size(), 2u);
  EXPECT_EQ(p2.at(3).members.size(), 4u);
  EXPECT_EQ(p2.total_members(), 7u);
  const auto p3 = build_partition(3);
  std::vector<std::size_t> sizes;
  for (const auto& c : p3.classes()) {
    sizes.push_back(c.members.size());
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 4, 8, 16}));
}

TEST(BuildPartition, RejectsSmallN) {
  EXPECT_THROW(build_partition(1), DomainError);
  EXPECT_THROW(build_partition(0), DomainError);
}

TEST(BuildPartition, MembersOrderedByNormThenCoordinates) {
  const auto p = build_partition(3);
  for (const auto& c : p.classes()) {
    for (std::size_t k = 1; k < c.members.size(); ++k) {
      const auto& a = c.members[k - 1];
      const auto& b = c.members[k];
      const auto ka = std::make_tuple(norm(a), a.re(), a.im());
      const auto kb = std::make_tuple(norm(b), b.re(), b.im());
      EXPECT_LT(ka, kb);
    }
  }
  EXPECT_EQ(p.at(2).members.front(), g(3, 0, 4));
}

class PartitionProperties : public ::testing::TestWithParam<int> {};

TEST_P(PartitionProperties, CoversExactlyTheZeroDivisors) {
  const int n = GetParam();
  const auto p = build_partition(n);
  std::set<std::pair<std::uint64_t, std::uint64_t>> got;
  for (const auto& c : p.classes()) {
    EXPECT_EQ(c.members.size(), std::size_t{1} << (c.j - 1));
    EXPECT_EQ(c.is_nilpotent_sq, c.j <= n);
    for (const auto& x : c.members) {
      EXPECT_EQ(valuation(x), 2 * n - c.j);
      EXPECT_TRUE(got.insert({x.re(), x.im()}).second) << "duplicate " << to_string(x);
    }
  }
  std::set<std::pair<std::uint64_t, std::uint64_t>> expected;
  for (const auto& x : ref::zero_divisors(n)) {
    expected.insert({static_cast<std::uint64_t>(x.re), static_cast<std::uint64_t>(x.im)});
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(p.total_members(), (std::size_t{1} << (2 * n - 1)) - 1);
}

TEST_P(PartitionProperties, MembersAreAssociatesOfTheDivisor) {
  const int n = GetParam();
  const auto p = build_partition(n);
  const std::int64_t m = std::int64_t{1} << n;
  std::vector<GaussianMod> units;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      if (is_unit(g(n, a, b))) {
        units.push_back(g(n, a, b));
      }
    }
  }
  for (const auto& c : p.classes()) {
    std::set<GaussianMod> orbit;
    for (const auto& u : units) {
      orbit.insert(mul(u, c.canonical_divisor));
    }
    EXPECT_EQ(orbit, std::set<GaussianMod>(c.members.begin(), c.members.end())) << "j = " << c.j;
  }
}

TEST_P(PartitionProperties, LambdaMembersHaveNilpotencyIndexTwo) {
  const int n = GetParam();
  const auto p = build_partition(n);
  for (const auto& c : p.classes()) {
    for (const auto& x : c.members) {
      const auto k = nilpotency_index(x);
      ASSERT_TRUE(k.has_value());
      if (c.j <= n) {
        EXPECT_EQ(*k, 2);
      } else {
        EXPECT_GT(*k, 2);
      }
    }
  }
  EXPECT_EQ(count_nilpotent_index2(p), (std::uint64_t{1} << n) - 1);
}

TEST_P(PartitionProperties, AdjacencyRuleMatchesDivisorProducts) {
  const int n = GetParam();
  for (int j = 1; j <= 2 * n - 1; ++j) {
    for (int jp = 1; jp <= 2 * n - 1; ++jp) {
      EXPECT_EQ(classes_adjacent(n, j, jp), mul(canonical_divisor(n, j), canonical_divisor(n, jp)).is_zero())
          << j << "," << jp;
    }
  }
}

TEST_P(PartitionProperties, ClassSizesDivideLaterOnes) {
  const int n = GetParam();
  const auto p = build_partition(n);
  for (int j = 1; j <= 2 * n - 1; ++j) {
    for (int jp = j + 1; jp <= 2 * n - 1; ++jp) {
      EXPECT_EQ(p.at(jp).members.size() % p.at(j).members.size(), 0u);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Exponents, PartitionProperties, ::testing::Values(2, 3, 4, 5));

TEST(Nilpotency, Examples) {
  EXPECT_EQ(nilpotency_index(g(2, 2, 2)), 2);
  EXPECT_EQ(nilpotency_index(g(2, 1, 1)), 4);
  EXPECT_FALSE(nilpotency_index(g(2, 1, 0)).has_value());
  EXPECT_EQ(count_nilpotent_index2(build_partition(2)), 3u);
  EXPECT_EQ(count_nilpotent_index2(build_partition(3)), 7u);
  EXPECT_EQ(count_nilpotent_index2(build_partition(4)), 15u);
}

TEST(ClassesAdjacent, Examples) {
  EXPECT_TRUE(classes_adjacent(2, 1, 3));
  EXPECT_FALSE(classes_adjacent(2, 2, 3));
  EXPECT_FALSE(classes_adjacent(3, 4, 4));
  EXPECT_TRUE(classes_adjacent(3, 3, 3));
}

TEST(Annihilator, Examples) {
  EXPECT_EQ(annihilator(g(2, 0, 0)).size(), 16u);
  EXPECT_EQ(annihilator(g(2, 2, 2)).size(), 8u);
  EXPECT_THROW(annihilator(g(kMaxAnnihilatorExponent + 1, 1, 1)), ResourceError);
}

TEST(Annihilator, SharedExactlyWithinClasses) {
  for (int n = 2; n <= 3; ++n) {
    const auto p = build_partition(n);
    std::vector<std::set<GaussianMod>> per_class;
    for (const auto& c : p.classes()) {
      const auto first = annihilator(c.members.front());
      const std::set<GaussianMod> reference(first.begin(), first.end());
      for (const auto& x : c.members) {
        const auto a = annihilator(x);
        EXPECT_EQ(std::set<GaussianMod>(a.begin(), a.end()), reference) << to_string(x);
      }
      per_class.push_back(reference);
    }
    for (std::size_t a = 0; a < per_class.size(); ++a) {
      for (std::size_t b = a + 1; b < per_class.size(); ++b) {
        EXPECT_NE(per_class[a], per_class[b]);
      }
    }
  }
}

}  // namespace
}  // namespace zdg
