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

#include <string>

#include "zdg/errors.hpp"

namespace zdg {

namespace {

std::uint64_t reduce(std::int64_t a, std::uint64_t modulus) {
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = a % m;
  if (r < 0) {
    r += m;
  }
  return static_cast<std::uint64_t>(r);
}

void require_same_ring(const GaussianMod& x, const GaussianMod& y) {
  if (x.exponent() != y.exponent()) {
    throw DomainError("mismatched moduli: 2^" + std::to_string(x.exponent()) + " vs 2^" +
                      std::to_string(y.exponent()));
  }
}

}  // namespace

GaussianMod GaussianMod::make(int n, std::int64_t a, std::int64_t b) {
  if (n < 1 || n > kMaxRingExponent) {
    throw DomainError("modulus exponent must lie in [1, 30], got " + std::to_string(n));
  }
  const std::uint64_t m = std::uint64_t{1} << n;
  return GaussianMod(n, reduce(a, m), reduce(b, m));
}

GaussianMod add(const GaussianMod& x, const GaussianMod& y) {
  require_same_ring(x, y);
  const std::uint64_t mask = x.modulus() - 1;
  return GaussianMod::make(x.exponent(), static_cast<std::int64_t>((x.re() + y.re()) & mask),
                           static_cast<std::int64_t>((x.im() + y.im()) & mask));
}

GaussianMod mul(const GaussianMod& x, const GaussianMod& y) {
  require_same_ring(x, y);
  // Unsigned wrap-around is harmless: the modulus is a power of two.
  const std::uint64_t mask = x.modulus() - 1;
  const std::uint64_t re = (x.re() * y.re() - x.im() * y.im()) & mask;
  const std::uint64_t im = (x.re() * y.im() + x.im() * y.re()) & mask;
  return GaussianMod::make(x.exponent(), static_cast<std::int64_t>(re),
                           static_cast<std::int64_t>(im));
}

std::uint64_t norm(const GaussianMod& x) { return x.re() * x.re() + x.im() * x.im(); }

bool is_unit(const GaussianMod& x) { return ((x.re() + x.im()) & 1U) == 1U; }

std::optional<int> valuation(const GaussianMod& x) {
  // Divide the integer lift by 1+i: (a+bi)/(1+i) = ((a+b) + (b-a)i)/2.
  auto a = static_cast<std::int64_t>(x.re());
  auto b = static_cast<std::int64_t>(x.im());
  const int infinite_at = 2 * x.exponent();
  int steps = 0;
  while ((a != 0 || b != 0) && ((a + b) & 1) == 0) {
    const std::int64_t next_a = (a + b) / 2;
    const std::int64_t next_b = (b - a) / 2;
    a = next_a;
    b = next_b;
    if (++steps >= infinite_at) {
      return std::nullopt;
    }
  }
  if (a == 0 && b == 0) {
    return std::nullopt;
  }
  return steps;
}

std::uint64_t euler_phi_power_of_1_plus_i(int j) {
  if (j < 1 || j > 64) {
    throw DomainError("euler_phi_power_of_1_plus_i: j must lie in [1, 64], got " +
                      std::to_string(j));
  }
  return std::uint64_t{1} << (j - 1);
}

std::string to_string(const GaussianMod& x) {
  return std::to_string(x.re()) + "+" + std::to_string(x.im()) + "i";
}

}  // namespace zdg
