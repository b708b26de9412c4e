/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/relaxation.hpp"

#include <algorithm>
#include <cmath>

namespace mbqp {
namespace {

constexpr double kFwGapTol = 1e-6;
constexpr int kFwMaxIters = 500;

std::vector<double> gradient(const Problem& p, const std::vector<double>& x) {
  std::vector<double> g = p.c;
  for (const Triplet& t : p.quad) {
    if (t.row == t.col) {
      g[t.row] += 2.0 * t.value * x[t.row];
    } else {
      g[t.row] += 2.0 * t.value * x[t.col];
      g[t.col] += 2.0 * t.value * x[t.row];
    }
  }
  return g;
}

double quad_form(const Problem& p, const std::vector<double>& d) {
  double q = 0.0;
  for (const Triplet& t : p.quad) {
    if (t.row == t.col)
      q += t.value * d[t.row] * d[t.row];
    else
      q += 2.0 * t.value * d[t.row] * d[t.col];
  }
  return q;
}

}  // namespace

RelaxationSolution solve_lp_relaxation(const LinearizedProblem& lin,
                                       const std::vector<double>& lower,
                                       const std::vector<double>& upper,
                                       const Deadline& deadline) {
  std::vector<double> lo = lower;
  std::vector<double> hi = upper;
  lo.resize(lin.base.n, 0.0);
  hi.resize(lin.base.n, 1.0);
  RelaxationSolution sol = lp_minimize(lin.base.c, lin.base.rows, lo, hi, deadline);
  if (!sol.x.empty()) sol.x = recover_binary_point(lin, sol.x);
  return sol;
}

RelaxationSolution solve_lp_relaxation(const Problem& p, const Deadline& deadline) {
  StopWatch watch;
  const LinearizedProblem lin = mccormick_linearize(p);
  RelaxationSolution sol = solve_lp_relaxation(lin, p.lower, p.upper, deadline);
  sol.solve_time = watch.elapsed_s();
  return sol;
}

RelaxationSolution solve_nlp_relaxation(const Problem& p, const Deadline& deadline, NlpMode mode) {
  StopWatch watch;
  p.validate();

  // Phase A: any feasible point of the polytope.
  const std::vector<double> zero(p.n, 0.0);
  RelaxationSolution start = lp_minimize(zero, p.rows, p.lower, p.upper, deadline);
  if (start.status == SolveStatus::Infeasible) {
    start.solve_time = watch.elapsed_s();
    return start;
  }
  if (start.x.empty()) {
    start.status = SolveStatus::NoSolutionTimeout;
    start.converged = false;
    start.solve_time = watch.elapsed_s();
    return start;
  }

  std::vector<double> x = std::move(start.x);
  RelaxationSolution sol;
  sol.status = SolveStatus::FeasibleSuboptimal;

  if (mode == NlpMode::FirstFeasible) {
    sol.x = std::move(x);
    sol.objective = eval_objective(p, sol.x);
    sol.converged = false;
    sol.solve_time = watch.elapsed_s();
    return sol;
  }

  // Frank-Wolfe descent.
  double fx = eval_objective(p, x);
  bool converged = false;
  for (int iter = 0; iter < kFwMaxIters; ++iter) {
    if (deadline.expired()) break;
    const std::vector<double> g = gradient(p, x);
    RelaxationSolution lp = lp_minimize(g, p.rows, p.lower, p.upper, deadline);
    if (lp.status != SolveStatus::Optimal) break;  // deadline inside the subproblem
    std::vector<double> d(p.n);
    double gap = 0.0;
    for (int j = 0; j < p.n; ++j) {
      d[j] = lp.x[j] - x[j];
      gap -= g[j] * d[j];
    }
    if (gap <= kFwGapTol) {
      converged = true;
      break;
    }
    const double a1 = -gap;          // directional derivative g'd
    const double a2 = quad_form(p, d);
    double step;
    if (a2 > 0.0) {
      step = std::clamp(-a1 / (2.0 * a2), 0.0, 1.0);
    } else {
      // Concave restriction: the minimum sits at an endpoint.
      step = (a1 + a2 < 0.0) ? 1.0 : 0.0;  // f(1) - f(0) = a1 + a2
    }
    if (step <= 0.0) break;
    std::vector<double> trial(p.n);
    for (int j = 0; j < p.n; ++j)
      trial[j] = std::clamp(x[j] + step * d[j], p.lower[j], p.upper[j]);
    const double fnew = eval_objective(p, trial);
    if (fnew > fx) break;  // numerical stall, keep the better point
    x = std::move(trial);
    fx = fnew;
  }

  sol.x = std::move(x);
  sol.objective = fx;
  sol.converged = converged;
  sol.solve_time = watch.elapsed_s();
  return sol;
}

}  // namespace mbqp
