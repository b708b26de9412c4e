/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "mbqp/types.hpp"

namespace mbqp {

/// Outcome of a continuous-relaxation solve. A feasible status guarantees
/// the point satisfies rows and bounds within 1e-6.
struct RelaxationSolution {
  std::vector<double> x;  // empty when no point is available
  double objective = std::numeric_limits<double>::quiet_NaN();
  SolveStatus status = SolveStatus::NoSolutionTimeout;
  double solve_time = 0.0;
  /// True when the solver reached its own termination criterion (simplex
  /// optimality, or the Frank-Wolfe gap test) rather than a deadline or an
  /// iteration cap.
  bool converged = false;
  std::string diagnostic;
};

/// Bounded-variable two-phase primal simplex for
///   min c'x  s.t.  rows (<= or =),  lower <= x <= upper  (finite bounds).
///
/// Dantzig pricing with lowest-index tie-breaking; switches to Bland's rule
/// after 50 consecutive degenerate pivots. The deadline is polled once per
/// pivot: expiry during phase 2 returns the current feasible basic point as
/// FeasibleSuboptimal, expiry during phase 1 returns NoSolutionTimeout.
RelaxationSolution lp_minimize(const std::vector<double>& c, const std::vector<SparseRow>& rows,
                               const std::vector<double>& lower, const std::vector<double>& upper,
                               const Deadline& deadline = {});

}  // namespace mbqp
