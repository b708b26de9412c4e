/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <utility>
#include <vector>

#include "mbqp/problem.hpp"

namespace mbqp {

/// Conflict structure of the quadratic objective: one edge per distinct
/// off-diagonal nonzero (diagonal terms linearize via x^2 = x and need no
/// fixing, so there are no self-loops).
struct HessianGraph {
  std::vector<int> vertices;                 // sorted variable indices with bilinear terms
  std::vector<std::pair<int, int>> edges;    // i < j, sorted lexicographically, unique
};

/// A set of variables hitting every edge. Fixing all members makes the
/// objective linear in the remaining free variables.
struct Cover {
  std::vector<int> members;  // sorted
  bool certified_minimum = false;
};

HessianGraph build_hessian_graph(const Problem& p);

/// Exact minimum vertex cover via the internal branch-and-bound on the
/// covering program. Falls back to the greedy matching cover (uncertified)
/// when the deadline fires before optimality is proven.
Cover min_vertex_cover(const HessianGraph& g, const Deadline& deadline = {});

/// Both endpoints of a lexicographically greedy maximal matching; at most
/// twice the minimum size.
Cover greedy_matching_cover(const HessianGraph& g);

bool covers_all_edges(const HessianGraph& g, const std::vector<int>& members);

}  // namespace mbqp
