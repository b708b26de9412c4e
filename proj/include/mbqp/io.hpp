/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbqp/bnb.hpp"
#include "mbqp/problem.hpp"
#include "mbqp/wflop.hpp"

namespace mbqp {

/// Instance files are self-describing JSON documents with full-precision
/// numbers; ">=" rows are negated to "<=" on read. Round trips are exact.
void write_instance(const Problem& p, const std::string& path,
                    const std::vector<std::pair<double, double>>* coords = nullptr);
Problem read_instance(const std::string& path);

/// Trace files: CSV with header time_s,objective, one row per incumbent.
void write_trace_csv(const IncumbentTrace& trace, const std::string& path);
std::vector<TraceEntry> read_trace_csv(const std::string& path);

/// Scenario list files: CSV with header u_ms,theta_deg,prob.
void write_scenario_csv(const std::vector<WindScenario>& scenarios, const std::string& path);
std::vector<WindScenario> read_scenario_csv(const std::string& path);

/// Wind distribution spec (JSON): Weibull speed parameters plus a von Mises
/// direction mixture with means in degrees.
WindDistribution read_distribution_json(const std::string& path);
void write_distribution_json(const WindDistribution& dist, const std::string& path);

}  // namespace mbqp
