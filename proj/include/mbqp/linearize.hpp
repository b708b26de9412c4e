/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mbqp/problem.hpp"

namespace mbqp {

/// McCormick (RLT-0) linearization of a binary-quadratic objective.
///
/// Every bilinear product x_i*x_j between binaries with a nonzero quadratic
/// coefficient gets one continuous auxiliary z in [0,1] plus the rows
///   z >= x_i + x_j - 1,  z <= x_i,  z <= x_j,
/// and squared binary terms are folded into the linear cost via x^2 = x.
/// At binary points the auxiliaries are forced to the exact products, so the
/// linearized objective agrees with the quadratic one.
struct LinearizedProblem {
  Problem base;                                // linear objective only
  std::map<std::pair<int, int>, int> z_index;  // (i<j) -> auxiliary variable index
  int original_n = 0;

  int aux_index(int i, int j) const;
};

/// Throws std::invalid_argument if a quadratic term touches a continuous
/// variable (only binary products are linearizable this way).
LinearizedProblem mccormick_linearize(const Problem& p);

/// Projects an extended point back onto the original variables.
std::vector<double> recover_binary_point(const LinearizedProblem& lin, std::span<const double> x_ext);

/// Extends an original-space point with z_ij = x_i * x_j (exact lift).
std::vector<double> lift_point(const LinearizedProblem& lin, std::span<const double> x);

}  // namespace mbqp
