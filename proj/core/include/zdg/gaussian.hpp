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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace zdg {

/// Largest modulus exponent the ring arithmetic accepts. Products of two
/// canonical coefficients stay below 2^62.
inline constexpr int kMaxRingExponent = 30;

/// An element a + bi of Z_{2^n}[i], stored in canonical form with both
/// coefficients in [0, 2^n).
class GaussianMod {
 public:
  /// Reduces (a, b) modulo 2^n. Throws DomainError unless 1 <= n <= 30.
  static GaussianMod make(int n, std::int64_t a, std::int64_t b);

  int exponent() const { return n_; }
  std::uint64_t re() const { return re_; }
  std::uint64_t im() const { return im_; }
  std::uint64_t modulus() const { return std::uint64_t{1} << n_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  friend bool operator==(const GaussianMod&, const GaussianMod&) = default;
  friend auto operator<=>(const GaussianMod&, const GaussianMod&) = default;

 private:
  GaussianMod(int n, std::uint64_t re, std::uint64_t im) : n_(n), re_(re), im_(im) {}

  int n_;
  std::uint64_t re_;
  std::uint64_t im_;
};

/// Both throw DomainError when the exponents differ.
GaussianMod add(const GaussianMod& x, const GaussianMod& y);
GaussianMod mul(const GaussianMod& x, const GaussianMod& y);

/// a^2 + b^2 of the canonical lift (not reduced).
std::uint64_t norm(const GaussianMod& x);

/// True iff re + im is odd, i.e. 1+i does not divide x.
bool is_unit(const GaussianMod& x);

/// (1+i)-adic valuation of x. nullopt stands for the infinite valuation of 0;
/// otherwise the value lies in [0, 2n - 1].
std::optional<int> valuation(const GaussianMod& x);

/// Number of units of Z[i]/(1+i)^j, i.e. 2^{j-1}. Throws DomainError if j < 1.
std::uint64_t euler_phi_power_of_1_plus_i(int j);

/// "a+bi" using the canonical coefficients, e.g. "2+2i", "0+1i".
std::string to_string(const GaussianMod& x);

}  // namespace zdg
