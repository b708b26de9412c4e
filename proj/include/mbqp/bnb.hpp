/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mbqp/problem.hpp"

namespace mbqp {

struct TraceEntry {
  double time_s = 0.0;
  double objective = 0.0;
};

/// Time-stamped sequence of improving incumbent objectives: times strictly
/// increasing, objectives strictly decreasing.
class IncumbentTrace {
 public:
  void record(double time_s, double objective);
  const std::vector<TraceEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::optional<double> best() const;

 private:
  std::vector<TraceEntry> entries_;
};

struct BnbConfig {
  double time_limit_s = kInf;
  double feas_tol = kDefaultFeasTol;
  double int_tol = kDefaultIntTol;
  std::string branch_rule = "most-fractional";    // ties to lowest index
  std::string node_selection = "dfs-plunge";      // best-bound fallback on prune
  std::optional<std::vector<double>> warm_start;  // installed when feasible, else dropped
  /// Incumbent times are measured from this origin (defaults to solve start),
  /// so callers embedding the solve in a longer pipeline can charge earlier
  /// phases against the trace.
  std::optional<std::chrono::steady_clock::time_point> trace_origin;
  /// Flip/swap local search on each accepted incumbent.
  bool polish_incumbents = true;
};

struct BnbResult {
  Solution solution;
  SolveStatus status = SolveStatus::NoSolutionTimeout;
  IncumbentTrace trace;
  std::int64_t nodes = 0;
  double lower_bound = -kInf;
};

/// Exact solver for binary-quadratic problems. Lower bounds come from the
/// McCormick LP relaxation per node; branching picks the most fractional
/// binary. Depth-first with plunging, best-bound fallback when a node is
/// pruned. Each node's LP point is rounded and kept when feasible.
BnbResult branch_and_bound(const Problem& p, const BnbConfig& config = {});

/// Enumerates all completions of the free binary variables (guard: at most
/// 24 of them, and no continuous variables). Test oracle and leaf solver.
Solution brute_force(const Problem& p);

}  // namespace mbqp
