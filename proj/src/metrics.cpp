/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mbqp {

double primal_gap(double v, double v_star) {
  const double av = std::abs(v);
  const double avs = std::abs(v_star);
  if (av == 0.0 && avs == 0.0) return 0.0;
  if (v * v_star < 0.0) return 1.0;
  return std::abs(v - v_star) / std::max(av, avs);
}

double primal_gap(const std::optional<double>& v, const std::optional<double>& v_star) {
  if (!v || !v_star) return 1.0;
  return primal_gap(*v, *v_star);
}

double primal_integral(const IncumbentTrace& trace, const std::optional<double>& v_star,
                       double horizon_s) {
  if (!(horizon_s > 0)) throw std::invalid_argument("primal_integral: horizon must be positive");
  double integral = 0.0;
  double seg_start = 0.0;
  double seg_gap = 1.0;
  for (const TraceEntry& e : trace.entries()) {
    const double t = std::clamp(e.time_s, 0.0, horizon_s);
    integral += seg_gap * (t - seg_start);
    seg_start = t;
    seg_gap = primal_gap(std::optional<double>(e.objective), v_star);
  }
  integral += seg_gap * (horizon_s - seg_start);
  return std::clamp(integral, 0.0, horizon_s);
}

std::optional<double> compile_best_known(std::span<const HeuristicResult> results) {
  std::optional<double> best;
  for (const HeuristicResult& r : results) {
    if (!r.solution || !r.solution->feasible) continue;
    if (!best || r.solution->objective < *best) best = r.solution->objective;
  }
  return best;
}

std::optional<double> compile_best_known(const std::vector<std::optional<double>>& objectives) {
  std::optional<double> best;
  for (const auto& v : objectives)
    if (v && (!best || *v < *best)) best = *v;
  return best;
}

}  // namespace mbqp
