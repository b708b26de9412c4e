/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/wflop.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "mbqp/rng.hpp"

namespace mbqp {

Grid Grid::regular(int nx, int ny, double spacing_m) {
  if (nx < 1 || ny < 1 || !(spacing_m > 0))
    throw std::invalid_argument("grid: dimensions and spacing must be positive");
  Grid g;
  g.coords.reserve(static_cast<std::size_t>(nx) * ny);
  for (int r = 0; r < ny; ++r)
    for (int c = 0; c < nx; ++c)
      g.coords.emplace_back(c * spacing_m, r * spacing_m);
  return g;
}

void WflopSpec::validate() const {
  if (grid.coords.empty()) throw std::invalid_argument("wflop: empty grid");
  std::set<std::pair<double, double>> distinct(grid.coords.begin(), grid.coords.end());
  if (distinct.size() != grid.coords.size())
    throw std::invalid_argument("wflop: grid positions must be distinct");
  if (turbine_count < 1 || turbine_count > static_cast<int>(grid.coords.size()))
    throw std::invalid_argument("wflop: turbine count must lie in [1, |grid|]");
  if (scenarios.empty()) throw std::invalid_argument("wflop: need at least one scenario");
  double psum = 0.0;
  for (const WindScenario& s : scenarios) {
    if (s.speed_ms < 0 || s.prob < 0)
      throw std::invalid_argument("wflop: scenario speed and probability must be nonnegative");
    psum += s.prob;
  }
  if (std::abs(psum - 1.0) > 1e-9)
    throw std::invalid_argument("wflop: scenario probabilities must sum to 1");
  if (!(params.induction > 0 && params.induction < 1) || !(params.expansion > 0) ||
      !(params.rotor_radius_m > 0))
    throw std::invalid_argument("wflop: wake parameters out of range");
}

double wake_deficit(const std::pair<double, double>& loc_i, const std::pair<double, double>& loc_j,
                    const WindScenario& scenario, const WakeParams& params) {
  const double downwind = (loc_j.first - loc_i.first) * std::cos(scenario.theta_rad) +
                          (loc_j.second - loc_i.second) * std::sin(scenario.theta_rad);
  if (!(downwind > 0.0)) return 0.0;
  const double spread = 1.0 + params.expansion * downwind / params.rotor_radius_m;
  return 2.0 * params.induction / (spread * spread);
}

Problem build_wflop_problem(const WflopSpec& spec) {
  spec.validate();
  const int n = static_cast<int>(spec.grid.coords.size());

  Problem p;
  p.n = n;
  p.c.assign(n, 0.0);
  p.lower.assign(n, 0.0);
  p.upper.assign(n, 1.0);
  p.binaries.resize(n);
  for (int j = 0; j < n; ++j) p.binaries[j] = j;

  // Upper-triangular coefficient: half of the pair's expected squared
  // deficits, so the symmetric expansion restores the full double sum.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double w = 0.0;
      for (const WindScenario& s : spec.scenarios) {
        const double dij = wake_deficit(spec.grid.coords[i], spec.grid.coords[j], s, spec.params);
        const double dji = wake_deficit(spec.grid.coords[j], spec.grid.coords[i], s, spec.params);
        w += s.prob * s.speed_ms * (dij * dij + dji * dji);
      }
      if (w != 0.0) p.quad.push_back({i, j, 0.5 * w});
    }
  }

  SparseRow card;
  card.idx.resize(n);
  card.val.assign(n, 1.0);
  for (int j = 0; j < n; ++j) card.idx[j] = j;
  card.sense = RowSense::Equal;
  card.rhs = static_cast<double>(spec.turbine_count);
  p.rows.push_back(std::move(card));

  p.name = "wflop_j" + std::to_string(n) + "_k" + std::to_string(spec.turbine_count) + "_m" +
           std::to_string(spec.scenarios.size());
  p.validate();
  return p;
}

void WindDistribution::validate() const {
  if (!(weibull_shape > 0) || !(weibull_scale > 0))
    throw std::invalid_argument("wind distribution: Weibull parameters must be positive");
  if (mixture.empty())
    throw std::invalid_argument("wind distribution: direction mixture must be nonempty");
  double wsum = 0.0;
  for (const Component& c : mixture) {
    if (c.weight < 0 || c.concentration < 0)
      throw std::invalid_argument("wind distribution: bad mixture component");
    wsum += c.weight;
  }
  if (!(wsum > 0)) throw std::invalid_argument("wind distribution: zero total mixture weight");
}

std::vector<WindScenario> sample_scenarios(const WindDistribution& dist, int count,
                                           std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_scenarios: count must be at least 1");
  dist.validate();
  Rng rng(seed);
  double wsum = 0.0;
  for (const auto& c : dist.mixture) wsum += c.weight;

  std::vector<WindScenario> out;
  out.reserve(count);
  for (int m = 0; m < count; ++m) {
    WindScenario s;
    s.speed_ms = rng.weibull(dist.weibull_shape, dist.weibull_scale);
    double pick = rng.uniform01() * wsum;
    const WindDistribution::Component* comp = &dist.mixture.back();
    for (const auto& c : dist.mixture) {
      if (pick < c.weight) {
        comp = &c;
        break;
      }
      pick -= c.weight;
    }
    s.theta_rad = rng.von_mises(comp->mean_rad, comp->concentration);
    s.prob = 1.0 / count;
    out.push_back(s);
  }
  return out;
}

}  // namespace mbqp
