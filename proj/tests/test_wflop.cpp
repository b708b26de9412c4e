/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>

#include "mbqp/rng.hpp"
#include "mbqp/wflop.hpp"

using namespace mbqp;

namespace {

/// Independent evaluator of the expected squared-deficit double sum.
double direct_double_sum(const WflopSpec& spec, const std::vector<double>& y) {
  const int n = static_cast<int>(spec.grid.coords.size());
  double total = 0.0;
  for (const WindScenario& s : spec.scenarios) {
    double inner = 0.0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double d = wake_deficit(spec.grid.coords[i], spec.grid.coords[j], s, spec.params);
        inner += d * d * y[i] * y[j];
      }
    }
    total += s.prob * s.speed_ms * inner;
  }
  return total;
}

WflopSpec small_spec(int nx, int ny, int k, std::uint64_t seed, int scenarios = 1) {
  WflopSpec spec;
  spec.grid = Grid::regular(nx, ny, 200.0);
  spec.turbine_count = k;
  spec.scenarios = sample_scenarios(WindDistribution{}, scenarios, seed);
  return spec;
}

}  // namespace

TEST_CASE("wake deficit basics") {
  const WakeParams params{1.0 / 3.0, 0.1, 40.0};
  WindScenario s;
  s.speed_ms = 8.0;
  s.theta_rad = 0.0;

  const std::pair<double, double> a{0.0, 0.0};
  CHECK(wake_deficit(a, a, s, params) == 0.0);

  const std::pair<double, double> upwind{-100.0, 0.0};
  CHECK(wake_deficit(a, upwind, s, params) == 0.0);  // upwind of the source

  const std::pair<double, double> downwind{400.0, 0.0};
  CHECK(wake_deficit(a, downwind, s, params) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

  // Perpendicular offset has zero projected distance.
  const std::pair<double, double> crosswind{0.0, 400.0};
  CHECK(wake_deficit(a, crosswind, s, params) == 0.0);
}

TEST_CASE("deficits decay monotonically with downwind distance") {
  const WakeParams params;
  WindScenario s;
  s.theta_rad = 0.0;
  double prev = kInf;
  for (double x = 50.0; x <= 2000.0; x += 50.0) {
    const double d = wake_deficit({0.0, 0.0}, {x, 0.0}, s, params);
    CHECK(d > 0.0);
    CHECK(d <= prev);
    prev = d;
  }
}

TEST_CASE("single-turbine layouts have zero objective") {
  const WflopSpec spec = small_spec(3, 3, 1, 5);
  const Problem p = build_wflop_problem(spec);
  for (int j = 0; j < p.n; ++j) {
    std::vector<double> y(p.n, 0.0);
    y[j] = 1.0;
    CHECK(eval_objective(p, y) == 0.0);
    CHECK(check_feasibility(p, y).feasible);
  }
}

TEST_CASE("two-location pair matches the closed form") {
  WflopSpec spec;
  spec.grid.coords = {{0.0, 0.0}, {300.0, 100.0}};
  spec.turbine_count = 2;
  WindScenario s;
  s.speed_ms = 9.5;
  s.theta_rad = 0.3;
  s.prob = 1.0;
  spec.scenarios = {s};
  const Problem p = build_wflop_problem(spec);

  const double d01 = wake_deficit(spec.grid.coords[0], spec.grid.coords[1], s, spec.params);
  const double d10 = wake_deficit(spec.grid.coords[1], spec.grid.coords[0], s, spec.params);
  const std::vector<double> both{1.0, 1.0};
  CHECK(eval_objective(p, both) ==
        doctest::Approx(s.prob * s.speed_ms * (d01 * d01 + d10 * d10)).epsilon(1e-12));
}

TEST_CASE("built problem reproduces the direct double sum at random layouts") {
  const WflopSpec spec = small_spec(4, 4, 5, 17, 3);
  const Problem p = build_wflop_problem(spec);
  Rng rng(19);
  std::vector<double> y(p.n);
  for (int rep = 0; rep < 1000; ++rep) {
    for (int j = 0; j < p.n; ++j) y[j] = rng.uniform_int(0, 1);
    const double via_problem = eval_objective(p, y);
    const double direct = direct_double_sum(spec, y);
    CHECK(std::abs(via_problem - direct) <= 1e-9 * std::max(1.0, std::abs(direct)));
    CHECK(via_problem >= -1e-15);
  }
}

TEST_CASE("objective is invariant under location relabeling") {
  WflopSpec spec = small_spec(3, 3, 3, 23);
  const Problem p = build_wflop_problem(spec);

  // Reverse the location order and compare at mirrored layouts.
  WflopSpec rev = spec;
  std::reverse(rev.grid.coords.begin(), rev.grid.coords.end());
  const Problem q = build_wflop_problem(rev);
  Rng rng(29);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> y(p.n), yr(p.n);
    for (int j = 0; j < p.n; ++j) y[j] = rng.uniform_int(0, 1);
    for (int j = 0; j < p.n; ++j) yr[p.n - 1 - j] = y[j];
    CHECK(eval_objective(p, y) == doctest::Approx(eval_objective(q, yr)).epsilon(1e-12));
  }
}

TEST_CASE("the cardinality row admits exactly K turbines") {
  const WflopSpec spec = small_spec(3, 3, 4, 31);
  const Problem p = build_wflop_problem(spec);
  std::vector<double> y(p.n, 0.0);
  for (int j = 0; j < 4; ++j) y[j] = 1.0;
  CHECK(check_feasibility(p, y).feasible);
  y[4] = 1.0;
  CHECK_FALSE(check_feasibility(p, y).feasible);
  y[4] = y[3] = 0.0;
  CHECK_FALSE(check_feasibility(p, y).feasible);
}

TEST_CASE("scenario sampling") {
  const WindDistribution dist;
  const auto single = sample_scenarios(dist, 1, 7);
  REQUIRE(single.size() == 1);
  CHECK(single[0].prob == 1.0);
  CHECK(single[0].speed_ms >= 0.0);

  const auto ten = sample_scenarios(dist, 10, 7);
  REQUIRE(ten.size() == 10);
  double psum = 0.0;
  for (const WindScenario& s : ten) {
    CHECK(s.prob == doctest::Approx(0.1));
    CHECK(s.theta_rad >= 0.0);
    CHECK(s.theta_rad < 2.0 * M_PI);
    psum += s.prob;
  }
  CHECK(psum == doctest::Approx(1.0).epsilon(1e-12));

  const auto again = sample_scenarios(dist, 10, 7);
  for (std::size_t k = 0; k < ten.size(); ++k) {
    CHECK(ten[k].speed_ms == again[k].speed_ms);
    CHECK(ten[k].theta_rad == again[k].theta_rad);
  }

  WindDistribution bad;
  bad.weibull_shape = 0.0;
  CHECK_THROWS_AS(sample_scenarios(bad, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_scenarios(dist, 0, 1), std::invalid_argument);
}

TEST_CASE("spec validation catches bad inputs") {
  WflopSpec spec = small_spec(2, 2, 5, 3);  // K above |J|
  CHECK_THROWS_AS(build_wflop_problem(spec), std::invalid_argument);

  spec = small_spec(2, 2, 2, 3);
  spec.scenarios[0].prob = 0.5;  // probabilities no longer sum to one
  CHECK_THROWS_AS(build_wflop_problem(spec), std::invalid_argument);

  spec = small_spec(2, 2, 2, 3);
  spec.grid.coords[1] = spec.grid.coords[0];  // duplicate position
  CHECK_THROWS_AS(build_wflop_problem(spec), std::invalid_argument);
}
