/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbqp/problem.hpp"
#include "mbqp/rng.hpp"

namespace mbqp {

/// The three synthetic benchmark families:
///  - CBQP: one cardinality equality, sum x = floor(n/4)
///  - CQKP: cardinality inequality plus one knapsack row
///  - QMKP: n_knapsack independent knapsack rows
enum class Family { CBQP, CQKP, QMKP };

const char* to_string(Family f);
Family family_from_string(const std::string& s);

struct GenSpec {
  Family family = Family::CQKP;
  int n = 500;
  double density = 0.1;  // probability of each off-diagonal pair
  int n_knapsack = 50;   // QMKP only
  std::uint64_t seed = 0;

  // Coefficient ranges; defaults documented in the README.
  int coeff_lo = -100, coeff_hi = 100;
  int weight_lo = 1, weight_hi = 50;
  double cardinality_fraction = 0.25;
  double capacity_fraction = 0.5;

  void validate() const;
};

/// Random sparse symmetric quadratic coefficients: each off-diagonal pair is
/// present with the given probability with a nonzero integer value in
/// [lo, hi]; every diagonal gets an integer value in [lo, hi] (zeros are not
/// stored). Deterministic per seed.
std::vector<Triplet> gen_h_matrix(int n, double density, std::uint64_t seed, int lo = -100,
                                  int hi = 100);

/// Builds one instance; verifies constructively that a feasible binary point
/// exists (the zero vector, or a cardinality-satisfying subset for CBQP).
Problem gen_instance(const GenSpec& spec);

}  // namespace mbqp
