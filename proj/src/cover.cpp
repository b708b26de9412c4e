/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/cover.hpp"

#include <algorithm>
#include <unordered_map>

#include "mbqp/bnb.hpp"

namespace mbqp {

HessianGraph build_hessian_graph(const Problem& p) {
  HessianGraph g;
  for (const Triplet& t : p.quad) {
    if (t.row == t.col || t.value == 0.0) continue;
    g.edges.emplace_back(t.row, t.col);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  for (const auto& [i, j] : g.edges) {
    g.vertices.push_back(i);
    g.vertices.push_back(j);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end()), g.vertices.end());
  return g;
}

bool covers_all_edges(const HessianGraph& g, const std::vector<int>& members) {
  std::unordered_map<int, char> mark;
  for (int v : members) mark[v] = 1;
  for (const auto& [i, j] : g.edges)
    if (!mark.count(i) && !mark.count(j)) return false;
  return true;
}

Cover greedy_matching_cover(const HessianGraph& g) {
  Cover cover;
  std::unordered_map<int, char> matched;
  for (const auto& [i, j] : g.edges) {
    if (matched.count(i) || matched.count(j)) continue;
    matched[i] = 1;
    matched[j] = 1;
    cover.members.push_back(i);
    cover.members.push_back(j);
  }
  std::sort(cover.members.begin(), cover.members.end());
  cover.certified_minimum = false;
  return cover;
}

Cover min_vertex_cover(const HessianGraph& g, const Deadline& deadline) {
  if (g.edges.empty()) return Cover{{}, true};

  // The covering program: min sum alpha_v s.t. alpha_i + alpha_j >= 1 per
  // edge, alpha binary. Stated in <= normal form.
  const int nv = static_cast<int>(g.vertices.size());
  std::unordered_map<int, int> local;
  for (int k = 0; k < nv; ++k) local[g.vertices[k]] = k;

  Problem cp;
  cp.n = nv;
  cp.c.assign(nv, 1.0);
  cp.lower.assign(nv, 0.0);
  cp.upper.assign(nv, 1.0);
  cp.binaries.resize(nv);
  for (int k = 0; k < nv; ++k) cp.binaries[k] = k;
  for (const auto& [i, j] : g.edges) {
    SparseRow row;
    row.idx = {local[i], local[j]};
    row.val = {-1.0, -1.0};
    row.rhs = -1.0;
    cp.rows.push_back(std::move(row));
  }

  const Cover greedy = greedy_matching_cover(g);
  std::vector<double> warm(nv, 0.0);
  for (int v : greedy.members) warm[local[v]] = 1.0;

  BnbConfig cfg;
  cfg.time_limit_s = std::max(0.0, deadline.remaining_s());
  cfg.warm_start = warm;
  cfg.polish_incumbents = false;
  const BnbResult res = branch_and_bound(cp, cfg);
  if (res.status != SolveStatus::Optimal) return greedy;

  Cover cover;
  cover.certified_minimum = true;
  for (int k = 0; k < nv; ++k)
    if (res.solution.x[k] > 0.5) cover.members.push_back(g.vertices[k]);
  return cover;
}

}  // namespace mbqp
