/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <span>

#include "mbqp/bnb.hpp"
#include "mbqp/heuristics.hpp"

namespace mbqp {

/// Normalized distance between an objective value v and the best known v*:
/// 0 when both are zero, 1 on sign disagreement, |v - v*| / max(|v|, |v*|)
/// otherwise. Always in [0, 1].
double primal_gap(double v, double v_star);

/// Missing v (no feasible solution) gives gap 1.
double primal_gap(const std::optional<double>& v, const std::optional<double>& v_star);

/// Step-function integral of the primal gap over [0, T]: gap 1 before the
/// first incumbent, then the gap of each incumbent until the next one, the
/// last one extended to T. Lies in [0, T]; equals T for an empty trace.
double primal_integral(const IncumbentTrace& trace, const std::optional<double>& v_star,
                       double horizon_s);

/// Best objective among all feasible results; absent when every method
/// failed (all gaps are then 1).
std::optional<double> compile_best_known(std::span<const HeuristicResult> results);
std::optional<double> compile_best_known(const std::vector<std::optional<double>>& objectives);

}  // namespace mbqp
