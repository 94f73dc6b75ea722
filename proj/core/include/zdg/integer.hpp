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

#include <cstdint>
#include <optional>
#include <string>

namespace zdg {

/// Exact integer type for closed forms. Every quantity the library evaluates
/// for n <= 16 fits comfortably (the largest, M2 near n = 16, is below 2^80).
__extension__ using Int = __int128;

/// Largest n accepted by the closed-form evaluators.
inline constexpr int kMaxFormulaExponent = 16;

/// 2^k for 0 <= k <= 125.
Int pow2(int k);

std::string to_string(Int value);

/// The value as int64 when it fits, otherwise nullopt.
std::optional<std::int64_t> to_int64(Int value);

}  // namespace zdg
