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

#include "zdg/integer.hpp"

#include <cstdint>
#include <string>

#include "zdg/errors.hpp"

namespace zdg {

Int pow2(int k) {
  if (k < 0 || k > 125) {
    throw DomainError("pow2: exponent out of range: " + std::to_string(k));
  }
  return Int{1} << k;
}

std::string to_string(Int value) {
  if (value == 0) {
    return "0";
  }
  const bool negative = value < 0;
  // Work with the negative magnitude so INT128_MIN does not overflow.
  Int v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) {
    digits.push_back('-');
  }
  return {digits.rbegin(), digits.rend()};
}

std::optional<std::int64_t> to_int64(Int value) {
  if (value < INT64_MIN || value > INT64_MAX) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace zdg
