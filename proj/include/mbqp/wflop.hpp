/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mbqp/problem.hpp"

namespace mbqp {

/// Candidate turbine locations in meters.
struct Grid {
  std::vector<std::pair<double, double>> coords;

  static Grid regular(int nx, int ny, double spacing_m);
};

struct WindScenario {
  double speed_ms = 0.0;   // free-stream speed U
  double theta_rad = 0.0;  // direction
  double prob = 1.0;
};

/// Jensen far-wake parameters.
struct WakeParams {
  double induction = 1.0 / 3.0;  // axial induction factor a, in (0,1)
  double expansion = 0.1;        // wake expansion factor alpha
  double rotor_radius_m = 40.0;
};

struct WflopSpec {
  Grid grid;
  std::vector<WindScenario> scenarios;
  int turbine_count = 10;  // K
  WakeParams params;

  void validate() const;
};

/// Jensen deficit felt at location j from a turbine at location i:
/// 2a / (1 + alpha * x_ij / r0)^2 for downwind projected distance
/// x_ij = (x_j - x_i) cos(theta) + (y_j - y_i) sin(theta) > 0, else 0.
double wake_deficit(const std::pair<double, double>& loc_i, const std::pair<double, double>& loc_j,
                    const WindScenario& scenario, const WakeParams& params);

/// Layout problem: minimize the expected sum of squared pairwise deficits
///   sum_m p_m U_m sum_i sum_j d_ij(m)^2 y_i y_j
/// subject to exactly K turbines placed, all y binary.
Problem build_wflop_problem(const WflopSpec& spec);

/// Parametric wind model: Weibull speed, von Mises mixture direction.
struct WindDistribution {
  double weibull_shape = 2.0;
  double weibull_scale = 9.0;
  struct Component {
    double weight = 1.0;
    double mean_rad = 0.0;
    double concentration = 2.0;  // kappa
  };
  std::vector<Component> mixture{{1.0, 0.0, 2.0}};

  void validate() const;
};

/// M equiprobable scenarios drawn from the distribution; deterministic per
/// seed.
std::vector<WindScenario> sample_scenarios(const WindDistribution& dist, int count,
                                           std::uint64_t seed);

}  // namespace mbqp
