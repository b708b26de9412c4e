/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mbqp/cover.hpp"
#include "mbqp/relaxation.hpp"

namespace mbqp {

const char* to_string(FailureReason r) {
  switch (r) {
    case FailureReason::None: return "none";
    case FailureReason::RelaxationFailed: return "relaxation-failed";
    case FailureReason::SubproblemInfeasible: return "subproblem-infeasible";
    case FailureReason::SubsolveNoSolution: return "subsolve-no-solution";
  }
  return "unknown";
}

HeuristicConfig HeuristicConfig::scaled_defaults(double total_limit_s) {
  HeuristicConfig cfg;
  cfg.total_limit_s = total_limit_s;
  cfg.relax_budget_s = 20.0 * total_limit_s / 60.0;
  cfg.cover_budget_s = 1.0 * total_limit_s / 60.0;
  return cfg;
}

void HeuristicConfig::validate() const {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("heuristic config: p must lie in [0,1]");
  if (!(total_limit_s > 0)) throw std::invalid_argument("heuristic config: total limit must be positive");
  if (!(relax_budget_s >= 0) || !(cover_budget_s >= 0))
    throw std::invalid_argument("heuristic config: budgets must be nonnegative");
  if (relax_budget_s + cover_budget_s >= total_limit_s)
    throw std::invalid_argument("heuristic config: T_r + T_c must be below the total limit");
}

std::vector<int> select_fix_set(const std::vector<double>& xbar, const std::vector<int>& candidates,
                                double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("select_fix_set: p must lie in [0,1]");
  const std::size_t k = static_cast<std::size_t>(
      std::floor(static_cast<double>(candidates.size()) * p + 1e-9));
  std::vector<int> order = candidates;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double da = std::abs(xbar[a] - 0.5);
    const double db = std::abs(xbar[b] - 0.5);
    if (da != db) return da > db;
    return a < b;
  });
  order.resize(std::min(k, order.size()));
  return order;
}

namespace {

enum class CandidateMode { AllBinaries, CoverSet };
enum class FixMode { TopDelta, IntegralOnly, AllCandidates };
enum class RelaxPolicy { Capped, ToCompletion };

// Subsolve time held back from the baselines' relaxation budget.
double baseline_reserve(double total) { return std::min(5.0, 0.5 * total); }

HeuristicResult run_pipeline(const Problem& prob, const HeuristicConfig& cfg, CandidateMode cand,
                             FixMode fix, RelaxPolicy policy) {
  prob.validate();
  cfg.validate();
  const StopWatch clock;
  const Deadline total = Deadline::after(cfg.total_limit_s);
  HeuristicResult res;

  // Relax phase.
  double relax_budget = policy == RelaxPolicy::Capped
                            ? cfg.relax_budget_s
                            : std::max(0.0, cfg.total_limit_s - baseline_reserve(cfg.total_limit_s));
  const Deadline relax_deadline = Deadline::earliest(total, Deadline::after(relax_budget));
  RelaxationSolution relax;
  if (cfg.relaxation == RelaxKind::LP) {
    relax = solve_lp_relaxation(prob, relax_deadline);
  } else {
    const NlpMode mode =
        policy == RelaxPolicy::Capped ? NlpMode::FirstFeasible : NlpMode::Improve;
    relax = solve_nlp_relaxation(prob, relax_deadline, mode);
  }
  res.relax_time_s = clock.elapsed_s();
  res.relaxation_status = relax.status;

  const bool have_point = relax.status == SolveStatus::Optimal ||
                          relax.status == SolveStatus::FeasibleSuboptimal;
  const bool relax_ok =
      policy == RelaxPolicy::Capped ? have_point : (have_point && relax.converged);
  if (!relax_ok || relax.x.empty()) {
    res.failure = FailureReason::RelaxationFailed;
    return res;
  }
  std::vector<double> xbar = std::move(relax.x);
  for (int j = 0; j < prob.n; ++j) xbar[j] = std::clamp(xbar[j], prob.lower[j], prob.upper[j]);

  // Cover phase.
  std::vector<int> candidates;
  if (cand == CandidateMode::CoverSet) {
    const StopWatch cover_clock;
    const Deadline cover_deadline =
        Deadline::earliest(total, Deadline::after(cfg.cover_budget_s));
    const Cover cover = min_vertex_cover(build_hessian_graph(prob), cover_deadline);
    candidates = cover.members;
    res.cover_time_s = cover_clock.elapsed_s();
  } else {
    candidates = prob.binaries;
  }

  // Fix phase.
  switch (fix) {
    case FixMode::TopDelta:
      res.fixed_set = select_fix_set(xbar, candidates, cfg.p);
      break;
    case FixMode::IntegralOnly:
      for (int j : candidates) {
        const double dist = std::min(std::abs(xbar[j]), std::abs(xbar[j] - 1.0));
        if (dist <= cfg.int_tol) res.fixed_set.push_back(j);
      }
      break;
    case FixMode::AllCandidates:
      res.fixed_set = candidates;
      break;
  }
  std::vector<std::pair<int, int>> assignments;
  assignments.reserve(res.fixed_set.size());
  for (int j : res.fixed_set)
    assignments.emplace_back(j, static_cast<int>(round_half_up(xbar[j])));
  const Problem sub = fix_variables(prob, assignments);

  // Search phase.
  std::vector<double> warm = xbar;
  for (int j : prob.binaries) warm[j] = round_half_up(warm[j]);

  BnbConfig bc;
  bc.time_limit_s = std::max(0.0, total.remaining_s());
  bc.feas_tol = cfg.feas_tol;
  bc.int_tol = cfg.int_tol;
  bc.warm_start = std::move(warm);
  bc.trace_origin = clock.origin();
  bc.polish_incumbents = cfg.polish;

  const StopWatch sub_clock;
  BnbResult bnb = branch_and_bound(sub, bc);
  res.subsolve_time_s = sub_clock.elapsed_s();
  res.subsolve_status = bnb.status;
  res.trace = std::move(bnb.trace);

  switch (bnb.status) {
    case SolveStatus::Infeasible:
      res.failure = FailureReason::SubproblemInfeasible;
      return res;
    case SolveStatus::NoSolutionTimeout:
      res.failure = FailureReason::SubsolveNoSolution;
      return res;
    default:
      break;
  }
  // Solutions live in the original index space; re-verify against the input.
  if (!check_feasibility(prob, bnb.solution.x, cfg.feas_tol).feasible) {
    res.failure = FailureReason::SubsolveNoSolution;
    return res;
  }
  bnb.solution.wall_time = clock.elapsed_s();
  res.solution = std::move(bnb.solution);
  return res;
}

}  // namespace

HeuristicResult relax_search(const Problem& p, const HeuristicConfig& config) {
  return run_pipeline(p, config, CandidateMode::AllBinaries, FixMode::TopDelta,
                      RelaxPolicy::Capped);
}

HeuristicResult cover_relax_search(const Problem& p, const HeuristicConfig& config) {
  return run_pipeline(p, config, CandidateMode::CoverSet, FixMode::TopDelta, RelaxPolicy::Capped);
}

HeuristicResult rens_baseline(const Problem& p, const HeuristicConfig& config) {
  return run_pipeline(p, config, CandidateMode::AllBinaries, FixMode::IntegralOnly,
                      RelaxPolicy::ToCompletion);
}

HeuristicResult undercover_baseline(const Problem& p, const HeuristicConfig& config) {
  return run_pipeline(p, config, CandidateMode::CoverSet, FixMode::AllCandidates,
                      RelaxPolicy::ToCompletion);
}

}  // namespace mbqp
