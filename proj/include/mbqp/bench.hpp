/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbqp/heuristics.hpp"
#include "mbqp/metrics.hpp"

namespace mbqp {

/// One configured method column of a benchmark: "bnb", "relax-search",
/// "cover-relax-search", "rens", or "undercover".
struct MethodSpec {
  std::string method = "relax-search";
  RelaxKind relaxation = RelaxKind::NLP;
  std::optional<double> p;  // override of the config default

  std::string display_name() const;
};

struct BenchConfig {
  std::vector<std::string> instance_paths;
  std::vector<MethodSpec> methods;
  double time_limit_s = 60.0;
  std::optional<double> relax_budget_s;  // default: scaled from the time limit
  std::optional<double> cover_budget_s;
  std::uint64_t seed = 1;
  int workers = 1;  // MBQP_WORKERS overrides
  std::string out_dir = "bench-out";
};

BenchConfig load_bench_config(const std::string& path);

struct BenchCell {
  std::string instance;
  std::string method;
  HeuristicResult result;
  std::optional<double> objective;
  double gap = 1.0;
  double integral = 0.0;
  double total_time_s = 0.0;
};

struct BenchReport {
  std::vector<BenchCell> cells;  // instance-major, method order as configured
  std::map<std::string, std::optional<double>> best_known;       // per instance
  std::map<std::string, double> mean_gap, mean_integral;         // per method
  double horizon_s = 60.0;
};

/// Runs every configured method on every instance, computes gaps and
/// integrals against the per-instance best known value, and writes the
/// report CSV plus one trace CSV per cell under the output directory.
BenchReport run_bench(const BenchConfig& config);

void write_report_csv(const BenchReport& report, const std::string& path);

/// Rebuilds gaps/integrals purely from the trace files in an output
/// directory (the report's deterministic columns can be cross-checked
/// against this).
BenchReport recompute_from_traces(const std::string& out_dir, double horizon_s);

}  // namespace mbqp
