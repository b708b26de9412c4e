/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace mbqp {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::FeasibleSuboptimal: return "feasible-suboptimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::NoSolutionTimeout: return "no-solution-timeout";
  }
  return "unknown";
}

std::vector<char> Problem::binary_mask() const {
  std::vector<char> mask(n, 0);
  for (int j : binaries) mask[j] = 1;
  return mask;
}

void Problem::validate() const {
  if (n < 0) throw std::invalid_argument("problem: negative dimension");
  if (static_cast<int>(c.size()) != n) throw std::invalid_argument("problem: c length != n");
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw std::invalid_argument("problem: bound vectors must have length n");
  for (int j = 0; j < n; ++j) {
    if (!(lower[j] <= upper[j]))
      throw std::invalid_argument("problem: lower bound above upper bound at variable " +
                                  std::to_string(j));
  }
  std::set<std::pair<int, int>> seen;
  for (const Triplet& t : quad) {
    if (t.row < 0 || t.col < 0 || t.row >= n || t.col >= n)
      throw std::invalid_argument("problem: quadratic index out of range");
    if (t.row > t.col)
      throw std::invalid_argument("problem: quadratic triplets must be upper-triangular");
    if (!seen.insert({t.row, t.col}).second)
      throw std::invalid_argument("problem: duplicate quadratic triplet");
  }
  for (const SparseRow& r : rows) {
    if (r.idx.size() != r.val.size())
      throw std::invalid_argument("problem: row index/value length mismatch");
    for (int j : r.idx)
      if (j < 0 || j >= n) throw std::invalid_argument("problem: row index out of range");
  }
  int prev = -1;
  for (int j : binaries) {
    if (j < 0 || j >= n) throw std::invalid_argument("problem: binary index out of range");
    if (j <= prev) throw std::invalid_argument("problem: binary set must be sorted and unique");
    prev = j;
    // Binaries carry [0,1] bounds, possibly tightened to a fixed value.
    if (lower[j] < -0.0 || upper[j] > 1.0 || (lower[j] != 0.0 && lower[j] != 1.0) ||
        (upper[j] != 0.0 && upper[j] != 1.0))
      throw std::invalid_argument("problem: binary variable " + std::to_string(j) +
                                  " must have bounds within {0,1}");
  }
}

double eval_objective(const Problem& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.n)
    throw std::invalid_argument("eval_objective: point length != n");
  double obj = 0.0;
  for (int j = 0; j < p.n; ++j) obj += p.c[j] * x[j];
  for (const Triplet& t : p.quad) {
    if (t.row == t.col)
      obj += t.value * x[t.row] * x[t.row];
    else
      obj += 2.0 * t.value * x[t.row] * x[t.col];
  }
  return obj;
}

double row_activity(const SparseRow& row, std::span<const double> x) {
  double a = 0.0;
  for (std::size_t k = 0; k < row.idx.size(); ++k) a += row.val[k] * x[row.idx[k]];
  return a;
}

ViolationReport check_feasibility(const Problem& p, std::span<const double> x, double tol) {
  if (static_cast<int>(x.size()) != p.n)
    throw std::invalid_argument("check_feasibility: point length != n");
  if (!(tol > 0)) throw std::invalid_argument("check_feasibility: tolerance must be positive");
  ViolationReport rep;
  for (const SparseRow& row : p.rows) {
    const double act = row_activity(row, x);
    const double viol = row.sense == RowSense::Equal ? std::abs(act - row.rhs) : act - row.rhs;
    rep.max_row_violation = std::max(rep.max_row_violation, viol);
  }
  for (int j : p.binaries) {
    const double dist = std::min(std::abs(x[j]), std::abs(x[j] - 1.0));
    rep.max_integrality_violation = std::max(rep.max_integrality_violation, dist);
  }
  for (int j = 0; j < p.n; ++j) {
    rep.max_bound_violation =
        std::max({rep.max_bound_violation, p.lower[j] - x[j], x[j] - p.upper[j]});
  }
  rep.feasible = rep.max_row_violation <= tol && rep.max_integrality_violation <= tol &&
                 rep.max_bound_violation <= tol;
  return rep;
}

Problem fix_variables(const Problem& p, const std::vector<std::pair<int, int>>& assignments) {
  const std::vector<char> mask = p.binary_mask();
  Problem out = p;
  for (const auto& [j, v] : assignments) {
    if (j < 0 || j >= p.n || !mask[j])
      throw std::invalid_argument("fix_variables: index " + std::to_string(j) +
                                  " is not a binary variable");
    if (v != 0 && v != 1)
      throw std::invalid_argument("fix_variables: assignment outside {0,1}");
    out.lower[j] = static_cast<double>(v);
    out.upper[j] = static_cast<double>(v);
  }
  return out;
}

Problem relax_integrality(const Problem& p) {
  Problem out = p;
  out.binaries.clear();
  return out;
}

}  // namespace mbqp
