/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbqp {

const char* to_string(Family f) {
  switch (f) {
    case Family::CBQP: return "cbqp";
    case Family::CQKP: return "cqkp";
    case Family::QMKP: return "qmkp";
  }
  return "unknown";
}

Family family_from_string(const std::string& s) {
  if (s == "cbqp" || s == "CBQP") return Family::CBQP;
  if (s == "cqkp" || s == "CQKP") return Family::CQKP;
  if (s == "qmkp" || s == "QMKP") return Family::QMKP;
  throw std::invalid_argument("unknown instance family: " + s);
}

void GenSpec::validate() const {
  if (n < 2) throw std::invalid_argument("gen spec: n must be at least 2");
  if (!(density > 0.0 && density <= 1.0))
    throw std::invalid_argument("gen spec: density must lie in (0,1]");
  if (family == Family::QMKP && n_knapsack < 1)
    throw std::invalid_argument("gen spec: QMKP needs at least one knapsack row");
  if (coeff_lo > coeff_hi || weight_lo > weight_hi || weight_lo < 1)
    throw std::invalid_argument("gen spec: bad coefficient ranges");
}

namespace {

std::vector<Triplet> draw_h(Rng& rng, int n, double density, int lo, int hi) {
  std::vector<Triplet> quad;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() >= density) continue;
      quad.push_back({i, j, static_cast<double>(rng.nonzero_int(lo, hi))});
    }
  }
  for (int i = 0; i < n; ++i) {
    const int v = rng.uniform_int(lo, hi);
    if (v != 0) quad.push_back({i, i, static_cast<double>(v)});
  }
  std::sort(quad.begin(), quad.end(),
            [](const Triplet& a, const Triplet& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
  return quad;
}

SparseRow knapsack_row(Rng& rng, int n, int wlo, int whi, double cap_fraction) {
  SparseRow row;
  row.idx.resize(n);
  row.val.resize(n);
  double wsum = 0.0;
  for (int j = 0; j < n; ++j) {
    row.idx[j] = j;
    row.val[j] = static_cast<double>(rng.uniform_int(wlo, whi));
    wsum += row.val[j];
  }
  row.sense = RowSense::LessEqual;
  row.rhs = cap_fraction * wsum;
  return row;
}

}  // namespace

std::vector<Triplet> gen_h_matrix(int n, double density, std::uint64_t seed, int lo, int hi) {
  Rng rng(seed);
  return draw_h(rng, n, density, lo, hi);
}

Problem gen_instance(const GenSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  Problem p;
  p.n = spec.n;
  p.quad = draw_h(rng, spec.n, spec.density, spec.coeff_lo, spec.coeff_hi);
  p.c.resize(spec.n);
  for (int j = 0; j < spec.n; ++j)
    p.c[j] = static_cast<double>(rng.uniform_int(spec.coeff_lo, spec.coeff_hi));
  p.lower.assign(spec.n, 0.0);
  p.upper.assign(spec.n, 1.0);
  p.binaries.resize(spec.n);
  for (int j = 0; j < spec.n; ++j) p.binaries[j] = j;

  const int k = static_cast<int>(std::floor(spec.n * spec.cardinality_fraction));
  switch (spec.family) {
    case Family::CBQP: {
      SparseRow card;
      card.idx.resize(spec.n);
      card.val.assign(spec.n, 1.0);
      for (int j = 0; j < spec.n; ++j) card.idx[j] = j;
      card.sense = RowSense::Equal;
      card.rhs = static_cast<double>(k);
      p.rows.push_back(std::move(card));
      break;
    }
    case Family::CQKP: {
      SparseRow card;
      card.idx.resize(spec.n);
      card.val.assign(spec.n, 1.0);
      for (int j = 0; j < spec.n; ++j) card.idx[j] = j;
      card.sense = RowSense::LessEqual;
      card.rhs = static_cast<double>(k);
      p.rows.push_back(std::move(card));
      p.rows.push_back(knapsack_row(rng, spec.n, spec.weight_lo, spec.weight_hi,
                                    spec.capacity_fraction));
      break;
    }
    case Family::QMKP: {
      for (int r = 0; r < spec.n_knapsack; ++r)
        p.rows.push_back(knapsack_row(rng, spec.n, spec.weight_lo, spec.weight_hi,
                                      spec.capacity_fraction));
      break;
    }
  }

  p.name = std::string(to_string(spec.family)) + "_n" + std::to_string(spec.n) + "_s" +
           std::to_string(spec.seed);
  p.validate();

  // Constructive feasibility witness.
  std::vector<double> witness(spec.n, 0.0);
  if (spec.family == Family::CBQP)
    for (int j = 0; j < k; ++j) witness[j] = 1.0;
  if (!check_feasibility(p, witness).feasible)
    throw std::runtime_error("gen_instance: generated instance has no feasibility witness");
  return p;
}

}  // namespace mbqp
