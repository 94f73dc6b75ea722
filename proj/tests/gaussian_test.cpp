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

#include "zdg/gaussian.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "reference.hpp"
#include "zdg/errors.hpp"

namespace zdg {
namespace {

std::vector<GaussianMod> all_elements(int n) {
  std::vector<GaussianMod> out;
  const std::int64_t m = std::int64_t{1} << n;
  for (std::int64_t a = 0; a < m; ++a) {
    for (std::int64_t b = 0; b < m; ++b) {
      out.push_back(GaussianMod::make(n, a, b));
    }
  }
  return out;
}

TEST(GaussianMod, MakeReducesIntoCanonicalRange) {
  const auto x = GaussianMod::make(2, 5, -1);
  EXPECT_EQ(x.re(), 1u);
  EXPECT_EQ(x.im(), 3u);
  EXPECT_TRUE(GaussianMod::make(3, 0, 0).is_zero());
  const auto alpha0 = GaussianMod::make(2, 2, 2);
  EXPECT_EQ(alpha0.re(), 2u);
  EXPECT_EQ(alpha0.im(), 2u);
  EXPECT_EQ(GaussianMod::make(4, -17, 33), GaussianMod::make(4, 15, 1));
}

TEST(GaussianMod, MakeRejectsBadExponent) {
  EXPECT_THROW(GaussianMod::make(0, 1, 1), DomainError);
  EXPECT_THROW(GaussianMod::make(-3, 1, 1), DomainError);
  EXPECT_THROW(GaussianMod::make(kMaxRingExponent + 1, 1, 1), DomainError);
}

TEST(GaussianMod, EqualityNeedsMatchingExponent) {
  EXPECT_NE(GaussianMod::make(2, 1, 1), GaussianMod::make(3, 1, 1));
  EXPECT_EQ(GaussianMod::make(3, 1, 1), GaussianMod::make(3, 9, 9));
}

TEST(GaussianMod, MultiplicationExamples) {
  EXPECT_EQ(mul(GaussianMod::make(2, 1, 1), GaussianMod::make(2, 1, 1)), GaussianMod::make(2, 0, 2));
  EXPECT_TRUE(mul(GaussianMod::make(2, 2, 2), GaussianMod::make(2, 2, 2)).is_zero());
  EXPECT_TRUE(mul(GaussianMod::make(2, 0, 2), GaussianMod::make(2, 2, 0)).is_zero());
}

TEST(GaussianMod, MismatchedModuliRejected) {
  EXPECT_THROW(mul(GaussianMod::make(2, 1, 1), GaussianMod::make(3, 1, 1)), DomainError);
  EXPECT_THROW(add(GaussianMod::make(2, 1, 1), GaussianMod::make(3, 1, 1)), DomainError);
}

TEST(GaussianMod, Norm) {
  EXPECT_EQ(norm(GaussianMod::make(2, 1, 1)), 2u);
  EXPECT_EQ(norm(GaussianMod::make(2, 2, 2)), 8u);
  EXPECT_EQ(norm(GaussianMod::make(2, 3, 1)), 10u);
}

TEST(GaussianMod, UnitExamples) {
  EXPECT_TRUE(is_unit(GaussianMod::make(2, 1, 0)));
  EXPECT_FALSE(is_unit(GaussianMod::make(2, 1, 1)));
  int units = 0;
  for (const auto& x : all_elements(2)) {
    units += is_unit(x) ? 1 : 0;
  }
  EXPECT_EQ(units, 8);
}

TEST(GaussianMod, ValuationExamples) {
  EXPECT_EQ(valuation(GaussianMod::make(2, 1, 1)), 1);
  EXPECT_EQ(valuation(GaussianMod::make(2, 2, 2)), 3);
  EXPECT_FALSE(valuation(GaussianMod::make(2, 0, 0)).has_value());
  // (1+i)^3 = -2+2i is an associate of 2+2i.
  const auto cube = mul(GaussianMod::make(2, 1, 1), mul(GaussianMod::make(2, 1, 1), GaussianMod::make(2, 1, 1)));
  EXPECT_EQ(cube, GaussianMod::make(2, -2, 2));
  bool associate = false;
  for (const auto& u : all_elements(2)) {
    associate = associate || (is_unit(u) && mul(u, cube) == GaussianMod::make(2, 2, 2));
  }
  EXPECT_TRUE(associate);
}

TEST(GaussianMod, EulerPhi) {
  EXPECT_EQ(euler_phi_power_of_1_plus_i(1), 1u);
  EXPECT_EQ(euler_phi_power_of_1_plus_i(3), 4u);
  EXPECT_EQ(euler_phi_power_of_1_plus_i(5), 16u);
  EXPECT_THROW(euler_phi_power_of_1_plus_i(0), DomainError);
}

TEST(GaussianMod, ToString) {
  EXPECT_EQ(to_string(GaussianMod::make(3, 3, 5)), "3+5i");
  EXPECT_EQ(to_string(GaussianMod::make(3, 0, 0)), "0+0i");
}

class RingLaws : public ::testing::TestWithParam<int> {};

TEST_P(RingLaws, CommutativeAssociativeDistributive) {
  const int n = GetParam();
  const auto elems = all_elements(n);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      ASSERT_EQ(mul(x, y), mul(y, x));
      ASSERT_EQ(add(x, y), add(y, x));
    }
  }
  // Associativity and distributivity over every triple is 4^{3n}; n = 3
  // gives 262144 triples.
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      const auto xy = mul(x, y);
      const auto x_plus_y = add(x, y);
      for (const auto& z : elems) {
        ASSERT_EQ(mul(xy, z), mul(x, mul(y, z)));
        ASSERT_EQ(add(x_plus_y, z), add(x, add(y, z)));
        ASSERT_EQ(mul(x, add(y, z)), add(xy, mul(x, z)));
      }
    }
  }
}

TEST_P(RingLaws, MultiplicationMatchesIntegerExpansion) {
  const int n = GetParam();
  for (const auto& x : all_elements(n)) {
    for (const auto& y : all_elements(n)) {
      const auto expected = ref::mul(n, {static_cast<std::int64_t>(x.re()), static_cast<std::int64_t>(x.im())},
                                     {static_cast<std::int64_t>(y.re()), static_cast<std::int64_t>(y.im())});
      const auto got = mul(x, y);
      ASSERT_EQ(static_cast<std::int64_t>(got.re()), expected.re);
      ASSERT_EQ(static_cast<std::int64_t>(got.im()), expected.im);
    }
  }
}

TEST_P(RingLaws, ValuationMatchesIdealMembership) {
  const int n = GetParam();
  for (const auto& x : all_elements(n)) {
    const int expected = ref::valuation(n, {static_cast<std::int64_t>(x.re()), static_cast<std::int64_t>(x.im())});
    const auto v = valuation(x);
    if (x.is_zero()) {
      ASSERT_FALSE(v.has_value());
    } else {
      ASSERT_TRUE(v.has_value());
      ASSERT_EQ(*v, expected) << to_string(x);
      ASSERT_GE(*v, 0);
      ASSERT_LE(*v, 2 * n - 1);
      ASSERT_EQ(*v == 0, is_unit(x));
    }
  }
}

TEST_P(RingLaws, ValuationIsMultiplicative) {
  const int n = GetParam();
  const auto as_int = [n](const GaussianMod& x) { return valuation(x).value_or(2 * n); };
  for (const auto& x : all_elements(n)) {
    for (const auto& y : all_elements(n)) {
      ASSERT_EQ(as_int(mul(x, y)), std::min(as_int(x) + as_int(y), 2 * n));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallExponents, RingLaws, ::testing::Values(1, 2, 3));

TEST(GaussianMod, UnitCountIsHalfTheRing) {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t units = 0;
    for (const auto& x : all_elements(n)) {
      units += is_unit(x) ? 1 : 0;
    }
    EXPECT_EQ(units, std::uint64_t{1} << (2 * n - 1)) << "n = " << n;
  }
}

TEST(GaussianMod, LargeExponentArithmeticStaysReduced) {
  const int n = kMaxRingExponent;
  const std::int64_t m = std::int64_t{1} << n;
  const auto x = GaussianMod::make(n, m - 1, m - 3);
  const auto y = GaussianMod::make(n, m - 7, 5);
  // (-1 - 3i)(-7 + 5i) = 7 + 15 + (-5 + 21)i = 22 + 16i
  EXPECT_EQ(mul(x, y), GaussianMod::make(n, 22, 16));
  EXPECT_EQ(valuation(GaussianMod::make(n, 0, m / 2)), 2 * n - 2);
}

}  // namespace
}  // namespace zdg
