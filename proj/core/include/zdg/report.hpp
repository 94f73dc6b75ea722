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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zdg/integer.hpp"
#include "zdg/oracles.hpp"
#include "zdg/zdg_graph.hpp"

namespace zdg {

enum class Status { kMatch, kMismatch, kOracleSkipped, kExpectedDeviation };

/// "match", "mismatch", "oracle-skipped", "expected-deviation".
std::string status_name(Status status);

/// Absent, exact integer, real, boolean or free text.
using ReportValue = std::variant<std::monostate, Int, double, bool, std::string>;

std::string render_value(const ReportValue& value);

struct InvariantRecord {
  std::string name;
  ReportValue formula;
  ReportValue oracle;
  std::string witness_digest;
  Status status = Status::kOracleSkipped;
  std::string note;
};

struct IndexRecord {
  std::string name;
  ReportValue published_form;
  ReportValue full_form;
  ReportValue oracle;
  Status status = Status::kOracleSkipped;
  ReportValue correction;
  std::string note;
};

/// A published closed form known to differ from the graph, with the reason.
/// Checks consult this table instead of special-casing index names.
struct ExpectedDeviation {
  std::string index;
  std::string rationale;
};

const std::vector<ExpectedDeviation>& expected_deviations();
const ExpectedDeviation* find_expected_deviation(const std::string& index);

/// Relative tolerance for Randic comparisons.
inline constexpr double kRandicRelativeTolerance = 1e-9;

struct AnalysisOptions {
  OracleSettings oracles = OracleSettings::defaults();
  /// Build the explicit graph and run oracles. When false, or when n exceeds
  /// explicit_cap, only closed-form identities are evaluated.
  bool build_graph = true;
  int explicit_cap = kDefaultExplicitCap;
  /// Recompute adjacency from ring products at any n (always done for n <= 4).
  bool audit_adjacency = false;
};

struct AnalysisReport {
  int n = 0;
  bool graph_built = false;
  std::vector<InvariantRecord> invariants;
  std::vector<IndexRecord> indices;

  bool has_unexpected_mismatch() const;
};

/// Formula-vs-formula identities that need no graph: Wiener statement vs
/// proof form, Wiener vs block sum, the block parts vs their series, size vs
/// the edge partition, M1 closed form vs class sum, and the saturation
/// sandwich. Requires 2 <= n <= 16.
std::vector<InvariantRecord> formula_identities(int n);

/// Full analysis of one n in [1, 16].
AnalysisReport analyze(int n, const AnalysisOptions& options = {});

/// 64-bit FNV-1a of `text`, as 16 hex digits.
std::string digest(const std::string& text);

std::string to_json(const AnalysisReport& report);
std::string to_json(const std::vector<AnalysisReport>& reports);
std::string to_markdown(const AnalysisReport& report);
std::string to_csv(const AnalysisReport& report, bool header = true);

/// One row per (n, invariant) and (n, index).
std::string verify_summary_markdown(const std::vector<AnalysisReport>& reports);
std::string verify_summary_csv(const std::vector<AnalysisReport>& reports);

}  // namespace zdg
