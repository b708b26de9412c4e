/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbqp/bnb.hpp"
#include "mbqp/problem.hpp"
#include "mbqp/simplex.hpp"

namespace mbqp {

enum class RelaxKind { LP, NLP };

enum class FailureReason { None, RelaxationFailed, SubproblemInfeasible, SubsolveNoSolution };

const char* to_string(FailureReason r);

struct HeuristicConfig {
  double p = 0.7;               // fixing ratio
  double relax_budget_s = 20.0;  // T_r
  double cover_budget_s = 1.0;   // T_c
  double total_limit_s = 60.0;
  RelaxKind relaxation = RelaxKind::NLP;
  std::uint64_t seed = 0;
  double feas_tol = kDefaultFeasTol;
  double int_tol = kDefaultIntTol;
  bool polish = true;

  /// p = 0.7, T_r = 20s and T_c = 1s at a 60s limit, scaled linearly for
  /// other limits.
  static HeuristicConfig scaled_defaults(double total_limit_s);

  void validate() const;  // requires T_r + T_c < total limit, 0 <= p <= 1
};

struct HeuristicResult {
  std::optional<Solution> solution;  // present only when verified feasible for the input problem
  IncumbentTrace trace;              // times measured from method start
  double relax_time_s = 0.0;
  double cover_time_s = 0.0;
  double subsolve_time_s = 0.0;
  std::vector<int> fixed_set;        // fixed variables in selection order
  FailureReason failure = FailureReason::None;
  SolveStatus subsolve_status = SolveStatus::NoSolutionTimeout;
  SolveStatus relaxation_status = SolveStatus::NoSolutionTimeout;
};

/// The k = floor(|candidates| * p) candidates whose relaxation values are
/// farthest from one half, ties to the lower variable index, in selection
/// order.
std::vector<int> select_fix_set(const std::vector<double>& xbar, const std::vector<int>& candidates,
                                double p);

/// Relax under T_r (LP: McCormick simplex, may stop suboptimal; NLP: first
/// feasible point), fix the top-p fraction of all binaries to the rounded
/// relaxation, then branch-and-bound on the restricted subproblem with the
/// fully rounded point as warm start.
HeuristicResult relax_search(const Problem& p, const HeuristicConfig& config);

/// Same, but the candidate fixing set is a vertex cover of the Hessian graph
/// (computed under T_c), so unfixed cover variables may leave bilinear terms
/// in the subproblem.
HeuristicResult cover_relax_search(const Problem& p, const HeuristicConfig& config);

/// RENS: solves the relaxation to completion (no T_r cap; the budget is the
/// total limit minus a subsolve reserve), fixes every binary integral in the
/// relaxation, and searches the rest. Fails with RelaxationFailed when the
/// relaxation does not finish within its budget.
HeuristicResult rens_baseline(const Problem& p, const HeuristicConfig& config);

/// Undercover: cover under T_c, relaxation to completion, all cover members
/// fixed to rounded relaxation values, subsolve on the remaining budget.
HeuristicResult undercover_baseline(const Problem& p, const HeuristicConfig& config);

}  // namespace mbqp
