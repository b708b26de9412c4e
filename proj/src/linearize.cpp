/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/linearize.hpp"

#include <stdexcept>
#include <string>

namespace mbqp {

int LinearizedProblem::aux_index(int i, int j) const {
  auto it = z_index.find({std::min(i, j), std::max(i, j)});
  return it == z_index.end() ? -1 : it->second;
}

LinearizedProblem mccormick_linearize(const Problem& p) {
  p.validate();
  const std::vector<char> mask = p.binary_mask();

  LinearizedProblem lin;
  lin.original_n = p.n;

  // Collect the distinct bilinear pairs that need an auxiliary.
  for (const Triplet& t : p.quad) {
    if (t.value == 0.0) continue;
    if (t.row == t.col) {
      if (!mask[t.row])
        throw std::invalid_argument("mccormick_linearize: squared continuous variable " +
                                    std::to_string(t.row) + " is unsupported");
      continue;
    }
    if (!mask[t.row] || !mask[t.col])
      throw std::invalid_argument("mccormick_linearize: bilinear term (" + std::to_string(t.row) +
                                  "," + std::to_string(t.col) +
                                  ") involves a continuous variable");
    lin.z_index.emplace(std::make_pair(t.row, t.col), 0);
  }
  int next = p.n;
  for (auto& [pair, idx] : lin.z_index) idx = next++;
  const int n_aux = next - p.n;

  Problem& base = lin.base;
  base.n = p.n + n_aux;
  base.name = p.name;
  base.c = p.c;
  base.c.resize(base.n, 0.0);
  base.lower = p.lower;
  base.upper = p.upper;
  base.lower.resize(base.n, 0.0);
  base.upper.resize(base.n, 1.0);
  base.binaries = p.binaries;
  base.rows = p.rows;
  base.rows.reserve(p.rows.size() + 3 * static_cast<std::size_t>(n_aux));

  for (const Triplet& t : p.quad) {
    if (t.value == 0.0) continue;
    if (t.row == t.col) {
      base.c[t.row] += t.value;  // x^2 = x for binaries
      continue;
    }
    const int z = lin.z_index.at({t.row, t.col});
    base.c[z] += 2.0 * t.value;  // symmetric expansion of the off-diagonal entry
  }

  for (const auto& [pair, z] : lin.z_index) {
    const auto [i, j] = pair;
    SparseRow ge;  // z >= x_i + x_j - 1  ==>  x_i + x_j - z <= 1
    ge.idx = {i, j, z};
    ge.val = {1.0, 1.0, -1.0};
    ge.rhs = 1.0;
    base.rows.push_back(std::move(ge));
    SparseRow ub_i;  // z <= x_i
    ub_i.idx = {z, i};
    ub_i.val = {1.0, -1.0};
    ub_i.rhs = 0.0;
    base.rows.push_back(std::move(ub_i));
    SparseRow ub_j;  // z <= x_j
    ub_j.idx = {z, j};
    ub_j.val = {1.0, -1.0};
    ub_j.rhs = 0.0;
    base.rows.push_back(std::move(ub_j));
  }
  return lin;
}

std::vector<double> recover_binary_point(const LinearizedProblem& lin,
                                         std::span<const double> x_ext) {
  if (static_cast<int>(x_ext.size()) != lin.base.n)
    throw std::invalid_argument("recover_binary_point: point length mismatch");
  return std::vector<double>(x_ext.begin(), x_ext.begin() + lin.original_n);
}

std::vector<double> lift_point(const LinearizedProblem& lin, std::span<const double> x) {
  if (static_cast<int>(x.size()) != lin.original_n)
    throw std::invalid_argument("lift_point: point length mismatch");
  std::vector<double> ext(x.begin(), x.end());
  ext.resize(lin.base.n, 0.0);
  for (const auto& [pair, z] : lin.z_index) ext[z] = x[pair.first] * x[pair.second];
  return ext;
}

}  // namespace mbqp
