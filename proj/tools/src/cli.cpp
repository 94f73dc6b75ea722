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

#include "zdg_cli/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "zdg/errors.hpp"
#include "zdg/export.hpp"
#include "zdg/indices.hpp"
#include "zdg/oracles.hpp"
#include "zdg/report.hpp"
#include "zdg/zdg_graph.hpp"

namespace zdg::cli {

namespace {

struct RunConfig {
  std::string command;
  std::optional<int> n;
  std::optional<int> from;
  std::optional<int> to;
  std::string format;
  std::string oracles = "all";
  std::optional<double> budget_seconds;
  bool audit_adjacency = false;
  bool allow_large = false;
  bool no_explicit = false;
  std::string out_path;
};

/// Thrown for bad arguments and refused resource requests (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double default_budget() {
  const char* env = std::getenv("ZDG_BUDGET_SECONDS");
  if (env == nullptr || *env == '\0') {
    return 60.0;
  }
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (*end != '\0' || !(value > 0.0)) {
    throw UsageError(std::string("ZDG_BUDGET_SECONDS must be a positive number, got '") + env + "'");
  }
  return value;
}

OracleSettings oracle_settings(const RunConfig& config) {
  const double budget = config.budget_seconds ? *config.budget_seconds : default_budget();
  if (!(budget > 0.0)) {
    throw UsageError("--budget-seconds must be positive");
  }
  OracleSettings settings = OracleSettings::defaults().with_time_budget(budget);
  if (config.oracles == "all") {
    return settings;
  }
  settings.enabled.clear();
  if (config.oracles == "none") {
    return settings;
  }
  std::stringstream list(config.oracles);
  std::string name;
  while (std::getline(list, name, ',')) {
    const auto kind = parse_oracle_name(name);
    if (!kind) {
      std::string known;
      for (const auto k : all_oracles()) {
        known += (known.empty() ? "" : ", ") + oracle_name(k);
      }
      throw UsageError("unknown oracle '" + name + "' (known: " + known + ")");
    }
    settings.enabled.insert(*kind);
  }
  return settings;
}

std::pair<int, int> n_range(const RunConfig& config) {
  if (config.n && (config.from || config.to)) {
    throw UsageError("give either --n or --from/--to, not both");
  }
  if (config.n) {
    return {*config.n, *config.n};
  }
  if (!config.from || !config.to) {
    throw UsageError(config.command + " needs --n or both --from and --to");
  }
  if (*config.from > *config.to) {
    throw UsageError("--from must not exceed --to");
  }
  return {*config.from, *config.to};
}

/// Refuses n outside [1, 16] and explicit graphs above n = 8 unless
/// --allow-large was given.
void check_range(const RunConfig& config, int lo, int hi, bool needs_graph) {
  if (lo < 1 || hi > kMaxFormulaExponent) {
    throw UsageError("n must lie in [1, " + std::to_string(kMaxFormulaExponent) + "]; got range [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  if (needs_graph && hi > kDefaultMaxN && !config.allow_large) {
    throw UsageError("n = " + std::to_string(hi) + " exceeds the explicit-graph limit n <= " +
                     std::to_string(kDefaultMaxN) + " (the graph has 2^(2n-1) - 1 = " +
                     to_string(pow2(2 * hi - 1) - 1) +
                     " vertices); pass --no-explicit for closed forms only, or --allow-large to "
                     "accept formula-only analysis above the limit");
  }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
  } else {
    write_atomically(config.out_path, text);
  }
}

AnalysisOptions analysis_options(const RunConfig& config) {
  AnalysisOptions options;
  options.oracles = oracle_settings(config);
  options.build_graph = !config.no_explicit;
  options.audit_adjacency = config.audit_adjacency;
  return options;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!config.n) {
    throw UsageError("analyze needs --n");
  }
  const int n = *config.n;
  check_range(config, n, n, !config.no_explicit);
  const std::string format = config.format.empty() ? "markdown" : config.format;
  if (format == "dot") {
    throw UsageError("analyze does not emit dot; use export");
  }
  if (n > kDefaultMaxN && !config.no_explicit) {
    err << "note: n = " << n << " is above the explicit-graph limit; running closed forms only\n";
  }
  const AnalysisReport report = analyze(n, analysis_options(config));
  if (format == "json") {
    emit(config, to_json(report), out);
  } else if (format == "csv") {
    emit(config, to_csv(report), out);
  } else {
    emit(config, to_markdown(report), out);
  }
  return report.has_unexpected_mismatch() ? kExitMismatch : kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = n_range(config);
  check_range(config, lo, hi, !config.no_explicit);
  const std::string format = config.format.empty() ? "markdown" : config.format;
  if (format == "dot") {
    throw UsageError("verify does not emit dot");
  }
  const AnalysisOptions options = analysis_options(config);
  std::vector<AnalysisReport> reports;
  bool failed = false;
  for (int n = lo; n <= hi; ++n) {
    reports.push_back(analyze(n, options));
    if (reports.back().has_unexpected_mismatch()) {
      failed = true;
      err << "n = " << n << ": unexpected mismatch\n";
    }
  }
  if (format == "json") {
    emit(config, to_json(reports), out);
  } else if (format == "csv") {
    emit(config, verify_summary_csv(reports), out);
  } else {
    emit(config, verify_summary_markdown(reports), out);
  }
  return failed ? kExitMismatch : kExitOk;
}

int cmd_export(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (!config.n) {
    throw UsageError("export needs --n");
  }
  const int n = *config.n;
  check_range(config, n, n, true);
  if (n > kDefaultMaxN) {
    throw UsageError("export builds the explicit graph, which is capped at n <= " +
                     std::to_string(kDefaultMaxN));
  }
  const std::string format = config.format.empty() ? "dot" : config.format;
  BuildOptions build;
  build.audit = config.audit_adjacency ? AuditMode::kOn : AuditMode::kAuto;
  const ZdgGraph graph = build_explicit(n, build);
  if (format == "dot") {
    emit(config, export_dot(graph), out);
  } else if (format == "json") {
    emit(config, export_graph_json(graph), out);
  } else {
    throw UsageError("export supports --format dot or json");
  }
  return kExitOk;
}

template <class Fn>
auto timed(double& seconds, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto value = fn();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return value;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto [lo, hi] = n_range(config);
  check_range(config, lo, hi, true);
  if (hi > kDefaultMaxN) {
    throw UsageError("bench builds explicit graphs, which are capped at n <= " +
                     std::to_string(kDefaultMaxN));
  }
  if (lo < 2) {
    throw UsageError("bench needs n >= 2");
  }
  if (!config.format.empty() && config.format != "csv") {
    throw UsageError("bench emits csv only");
  }
  std::ostringstream csv;
  csv << "n,method,wall_seconds,value\n";
  bool disagree = false;
  const auto row = [&](int n, const char* method, double seconds, const std::string& value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", seconds);
    csv << n << ',' << method << ',' << buf << ',' << value << '\n';
  };
  for (int n = lo; n <= hi; ++n) {
    BuildOptions plain;
    plain.audit = AuditMode::kOff;
    double t_rule = 0.0;
    const ZdgGraph graph = timed(t_rule, [&] { return build_explicit(n, plain); });
    double t_mul = 0.0;
    const Graph by_product = timed(t_mul, [&] { return multiplication_adjacency(graph.vertices()); });
    row(n, "adjacency_rule", t_rule, std::to_string(graph.size()));
    row(n, "adjacency_mul", t_mul, std::to_string(by_product.size()));
    if (!(by_product == graph.adjacency())) {
      err << "n = " << n << ": rule and multiplication adjacency differ\n";
      disagree = true;
    }

    double t_block = 0.0;
    const Int block = timed(t_block, [&] { return wiener_block(n); });
    double t_bfs = 0.0;
    const auto bfs = timed(t_bfs, [&] { return bfs_distance_sum(graph.adjacency()); });
    row(n, "wiener_block", t_block, to_string(block));
    row(n, "wiener_bfs", t_bfs, bfs ? to_string(*bfs) : std::string("disconnected"));
    if (!bfs || *bfs != block) {
      err << "n = " << n << ": block and BFS Wiener values differ\n";
      disagree = true;
    }
  }
  emit(config, csv.str(), out);
  return disagree ? kExitMismatch : kExitOk;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw std::runtime_error("cannot open '" + tmp + "' for writing");
    }
    file << contents;
    file.flush();
    if (!file) {
      throw std::runtime_error("write to '" + tmp + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path + "'");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Zero-divisor graphs of Z_{2^n}[i]: construction, invariants and verification", "zdg"};
  app.require_subcommand(1, 1);

  const auto add_common = [&](CLI::App* sub, bool range) {
    sub->add_option("--n", config.n, "Ring exponent n");
    if (range) {
      sub->add_option("--from", config.from, "First n of the range");
      sub->add_option("--to", config.to, "Last n of the range");
    }
    sub->add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "markdown", "dot"}));
    sub->add_option("--oracles", config.oracles,
                    "Comma-separated oracle list, 'all' or 'none' "
                    "(eccentricity,clique,independence,matching,saturation,connectivity,coloring)");
    sub->add_option("--budget-seconds", config.budget_seconds,
                    "Per-oracle time budget (default $ZDG_BUDGET_SECONDS or 60)");
    sub->add_flag("--audit-adjacency", config.audit_adjacency,
                  "Recheck every edge against ring multiplication");
    sub->add_flag("--allow-large", config.allow_large, "Accept n above the explicit-graph limit");
    sub->add_flag("--no-explicit", config.no_explicit, "Closed forms only; build no graphs");
    sub->add_option("--out", config.out_path, "Write output to PATH instead of stdout");
  };
  add_common(app.add_subcommand("analyze", "All invariants and indices for one n"), false);
  add_common(app.add_subcommand("verify", "Formula-vs-oracle reconciliation over a range of n"), true);
  add_common(app.add_subcommand("export", "Write the graph as DOT or JSON"), false);
  add_common(app.add_subcommand("bench", "Time structural against brute-force computations"), true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    if (config.command == "analyze") {
      return cmd_analyze(config, out, err);
    }
    if (config.command == "verify") {
      return cmd_verify(config, out, err);
    }
    if (config.command == "export") {
      return cmd_export(config, out, err);
    }
    return cmd_bench(config, out, err);
  } catch (const UsageError& e) {
    err << "zdg " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "zdg " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "zdg " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "zdg " << config.command << ": verification failed: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "zdg " << config.command << ": " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace zdg::cli
