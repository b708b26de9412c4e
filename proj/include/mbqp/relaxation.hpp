/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "mbqp/linearize.hpp"
#include "mbqp/problem.hpp"
#include "mbqp/simplex.hpp"

namespace mbqp {

enum class NlpMode { FirstFeasible, Improve };

/// Solves the McCormick LP relaxation and projects the point back onto the
/// original variables. The reported objective lives in the linearized space
/// and is a valid lower bound on the binary optimum when status is Optimal.
RelaxationSolution solve_lp_relaxation(const Problem& p, const Deadline& deadline = {});

/// Same, but reuses a prebuilt linearization with per-call bounds for the
/// original variables (auxiliary bounds stay [0,1]).
RelaxationSolution solve_lp_relaxation(const LinearizedProblem& lin,
                                       const std::vector<double>& lower,
                                       const std::vector<double>& upper,
                                       const Deadline& deadline = {});

/// Continuous relaxation of the quadratic objective over {Ax <= b, bounds}.
///
/// Phase A locates a feasible point with a phase-1 simplex. FirstFeasible
/// returns that point immediately. Improve runs Frank-Wolfe: each iteration
/// solves one LP with the gradient objective and takes an exact line search
/// step along the segment, so iterates stay feasible and the objective never
/// increases. Stops on a Frank-Wolfe gap below 1e-6 (converged), 500
/// iterations, or the deadline.
RelaxationSolution solve_nlp_relaxation(const Problem& p, const Deadline& deadline = {},
                                        NlpMode mode = NlpMode::FirstFeasible);

}  // namespace mbqp
