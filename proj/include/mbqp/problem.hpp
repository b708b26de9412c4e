/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mbqp/types.hpp"

namespace mbqp {

/// A mixed binary quadratic program:
///   min  x'Hx + c'x
///   s.t. A x {<=,=} b,  bounds on x,  x_j in {0,1} for j in the binary set.
///
/// H is stored as upper-triangular triplets and treated as symmetric: an
/// off-diagonal triplet (i, j, v) with i < j contributes 2*v*x_i*x_j to the
/// objective. Instances are immutable in practice: operations return new
/// values rather than mutating in place.
struct Problem {
  int n = 0;
  std::vector<double> c;
  std::vector<Triplet> quad;      // upper triangle, row <= col, no duplicates
  std::vector<SparseRow> rows;
  std::vector<int> binaries;      // sorted, unique
  std::vector<double> lower;
  std::vector<double> upper;
  std::string name;

  int num_rows() const { return static_cast<int>(rows.size()); }

  /// Per-variable flag vector marking the binary set.
  std::vector<char> binary_mask() const;

  /// Throws std::invalid_argument on any structural inconsistency.
  void validate() const;
};

/// x'Hx + c'x with symmetric expansion of the upper-triangular storage.
double eval_objective(const Problem& p, std::span<const double> x);

/// Activity a_i'x of one row.
double row_activity(const SparseRow& row, std::span<const double> x);

/// Maximum constraint/integrality/bound violations at x; feasible iff all
/// three maxima are <= tol.
ViolationReport check_feasibility(const Problem& p, std::span<const double> x,
                                  double tol = kDefaultFeasTol);

/// Fixes binary variables by tightening both bounds to the assigned value.
/// The index space, objective, and constraints are unchanged.
Problem fix_variables(const Problem& p, const std::vector<std::pair<int, int>>& assignments);

/// Drops integrality: the binary set becomes empty, bounds are kept.
Problem relax_integrality(const Problem& p);

}  // namespace mbqp
