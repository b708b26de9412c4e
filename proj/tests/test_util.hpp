/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "mbqp/instgen.hpp"
#include "mbqp/problem.hpp"
#include "mbqp/rng.hpp"

namespace testutil {

using namespace mbqp;

/// Random small instance drawn from the synthetic families plus an
/// unconstrained variant, for oracle comparisons.
inline Problem random_small_problem(Rng& rng, int n_min = 4, int n_max = 14) {
  const int pick = rng.uniform_int(0, 3);
  const int n = rng.uniform_int(n_min, n_max);
  if (pick == 3) {
    // Unconstrained box problem.
    Problem p;
    p.n = n;
    p.quad = gen_h_matrix(n, 0.5, rng.next_u64(), -20, 20);
    p.c.resize(n);
    for (int j = 0; j < n; ++j) p.c[j] = rng.uniform_int(-20, 20);
    p.lower.assign(n, 0.0);
    p.upper.assign(n, 1.0);
    p.binaries.resize(n);
    for (int j = 0; j < n; ++j) p.binaries[j] = j;
    p.name = "box_n" + std::to_string(n);
    return p;
  }
  GenSpec spec;
  spec.family = pick == 0 ? Family::CBQP : (pick == 1 ? Family::CQKP : Family::QMKP);
  spec.n = n;
  spec.density = 0.1 + 0.5 * rng.uniform01();
  spec.n_knapsack = 3;
  spec.seed = rng.next_u64();
  return gen_instance(spec);
}

/// Solves an n x n linear system by Gaussian elimination with partial
/// pivoting; empty result when near-singular.
inline std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a,
                                                      std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-9) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = b[j] / a[j][j];
  return x;
}

/// Independent LP oracle: enumerates every candidate vertex (each choice of
/// n active constraints among rows and bounds), keeps the feasible ones, and
/// returns the best objective. Exponential; for tiny LPs only.
inline std::optional<double> lp_vertex_oracle(const std::vector<double>& c,
                                              const std::vector<SparseRow>& rows,
                                              const std::vector<double>& lo,
                                              const std::vector<double>& hi) {
  const int n = static_cast<int>(c.size());
  const int m = static_cast<int>(rows.size());
  const int total = m + 2 * n;
  std::optional<double> best;

  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j)
      if (x[j] < lo[j] - 1e-7 || x[j] > hi[j] + 1e-7) return false;
    for (const SparseRow& row : rows) {
      double act = 0.0;
      for (std::size_t k = 0; k < row.idx.size(); ++k) act += row.val[k] * x[row.idx[k]];
      if (row.sense == RowSense::Equal ? std::abs(act - row.rhs) > 1e-7 : act > row.rhs + 1e-7)
        return false;
    }
    return true;
  };

  std::vector<int> chosen(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
      std::vector<double> b(n, 0.0);
      for (int k = 0; k < n; ++k) {
        const int pick = chosen[k];
        if (pick < m) {
          for (std::size_t t = 0; t < rows[pick].idx.size(); ++t)
            a[k][rows[pick].idx[t]] = rows[pick].val[t];
          b[k] = rows[pick].rhs;
        } else if (pick < m + n) {
          a[k][pick - m] = 1.0;
          b[k] = lo[pick - m];
        } else {
          a[k][pick - m - n] = 1.0;
          b[k] = hi[pick - m - n];
        }
      }
      const auto x = solve_dense(std::move(a), std::move(b));
      if (!x || !feasible(*x)) return;
      double obj = 0.0;
      for (int j = 0; j < n; ++j) obj += c[j] * (*x)[j];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int i = start; i < total; ++i) {
      chosen[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

/// Exhaustive minimum vertex cover size by subset enumeration.
inline int exhaustive_min_cover_size(const std::vector<std::pair<int, int>>& edges,
                                     const std::vector<int>& vertices) {
  const int nv = static_cast<int>(vertices.size());
  std::vector<std::pair<int, int>> local_edges;
  for (const auto& [i, j] : edges) {
    const int a = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), i) -
                                   vertices.begin());
    const int b = static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), j) -
                                   vertices.begin());
    local_edges.emplace_back(a, b);
  }
  int best = nv;
  for (std::uint32_t mask = 0; mask < (1u << nv); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    bool covers = true;
    for (const auto& [a, b] : local_edges) {
      if (!((mask >> a) & 1u) && !((mask >> b) & 1u)) {
        covers = false;
        break;
      }
    }
    if (covers) best = size;
  }
  return best;
}

/// Best objective over all layouts with exactly k ones (independent
/// enumeration oracle for cardinality-constrained problems).
inline double best_k_subset_objective(const Problem& p, int k) {
  std::vector<double> x(p.n, 0.0);
  std::vector<int> pick(k);
  double best = kInf;
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      for (int j = 0; j < p.n; ++j) x[j] = 0.0;
      for (int j : pick) x[j] = 1.0;
      best = std::min(best, eval_objective(p, x));
      return;
    }
    for (int i = start; i < p.n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace testutil
