/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mbqp {

using nlohmann::json;

namespace {

constexpr const char* kInstanceFormat = "mbqp-instance-v1";

json open_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void dump_json(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace

void write_instance(const Problem& p, const std::string& path,
                    const std::vector<std::pair<double, double>>* coords) {
  p.validate();
  json j;
  j["format"] = kInstanceFormat;
  j["name"] = p.name;
  j["n"] = p.n;
  j["c"] = p.c;
  json quad = json::array();
  for (const Triplet& t : p.quad) quad.push_back({t.row, t.col, t.value});
  j["quad"] = quad;
  json rows = json::array();
  for (const SparseRow& r : p.rows) {
    json row;
    row["idx"] = r.idx;
    row["val"] = r.val;
    row["sense"] = r.sense == RowSense::Equal ? "=" : "<=";
    row["rhs"] = r.rhs;
    rows.push_back(std::move(row));
  }
  j["rows"] = rows;
  j["binaries"] = p.binaries;
  j["lower"] = p.lower;
  j["upper"] = p.upper;
  if (coords) {
    json cs = json::array();
    for (const auto& [x, y] : *coords) cs.push_back({x, y});
    j["coords"] = cs;
  }
  dump_json(j, path);
}

Problem read_instance(const std::string& path) {
  const json j = open_json(path);
  if (!j.contains("format") || j["format"] != kInstanceFormat)
    throw std::runtime_error(path + ": not a recognized instance file");
  Problem p;
  p.name = j.value("name", std::string{});
  p.n = j.at("n").get<int>();
  p.c = j.at("c").get<std::vector<double>>();
  for (const auto& t : j.at("quad"))
    p.quad.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<double>()});
  for (const auto& row : j.at("rows")) {
    SparseRow r;
    r.idx = row.at("idx").get<std::vector<int>>();
    r.val = row.at("val").get<std::vector<double>>();
    r.rhs = row.at("rhs").get<double>();
    const std::string sense = row.at("sense").get<std::string>();
    if (sense == "<=") {
      r.sense = RowSense::LessEqual;
    } else if (sense == "=") {
      r.sense = RowSense::Equal;
    } else if (sense == ">=") {
      r.sense = RowSense::LessEqual;  // normalize by negation
      for (double& v : r.val) v = -v;
      r.rhs = -r.rhs;
    } else {
      throw std::runtime_error(path + ": unknown row sense '" + sense + "'");
    }
    p.rows.push_back(std::move(r));
  }
  p.binaries = j.at("binaries").get<std::vector<int>>();
  p.lower = j.at("lower").get<std::vector<double>>();
  p.upper = j.at("upper").get<std::vector<double>>();
  p.validate();
  return p;
}

void write_trace_csv(const IncumbentTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "time_s,objective\n";
  out.precision(17);
  for (const TraceEntry& e : trace.entries()) out << e.time_s << "," << e.objective << "\n";
}

std::vector<TraceEntry> read_trace_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("time_s,objective", 0) != 0)
    throw std::runtime_error(path + ": missing trace header");
  std::vector<TraceEntry> entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error(path + ": malformed trace row");
    entries.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
  }
  return entries;
}

void write_scenario_csv(const std::vector<WindScenario>& scenarios, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "u_ms,theta_deg,prob\n";
  out.precision(17);
  for (const WindScenario& s : scenarios)
    out << s.speed_ms << "," << s.theta_rad * 180.0 / M_PI << "," << s.prob << "\n";
}

std::vector<WindScenario> read_scenario_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line.rfind("u_ms,theta_deg,prob", 0) != 0)
    throw std::runtime_error(path + ": missing scenario header");
  std::vector<WindScenario> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string u, th, pr;
    if (!std::getline(ss, u, ',') || !std::getline(ss, th, ',') || !std::getline(ss, pr, ','))
      throw std::runtime_error(path + ": malformed scenario row");
    WindScenario s;
    s.speed_ms = std::stod(u);
    s.theta_rad = std::stod(th) * M_PI / 180.0;
    s.prob = std::stod(pr);
    out.push_back(s);
  }
  return out;
}

WindDistribution read_distribution_json(const std::string& path) {
  const json j = open_json(path);
  WindDistribution dist;
  dist.weibull_shape = j.value("weibull_shape", dist.weibull_shape);
  dist.weibull_scale = j.value("weibull_scale", dist.weibull_scale);
  if (j.contains("mixture")) {
    dist.mixture.clear();
    for (const auto& c : j["mixture"]) {
      WindDistribution::Component comp;
      comp.weight = c.value("weight", 1.0);
      comp.mean_rad = c.value("mean_deg", 0.0) * M_PI / 180.0;
      comp.concentration = c.value("kappa", 2.0);
      dist.mixture.push_back(comp);
    }
  }
  dist.validate();
  return dist;
}

void write_distribution_json(const WindDistribution& dist, const std::string& path) {
  dist.validate();
  json j;
  j["weibull_shape"] = dist.weibull_shape;
  j["weibull_scale"] = dist.weibull_scale;
  json mix = json::array();
  for (const auto& c : dist.mixture) {
    json comp;
    comp["weight"] = c.weight;
    comp["mean_deg"] = c.mean_rad * 180.0 / M_PI;
    comp["kappa"] = c.concentration;
    mix.push_back(std::move(comp));
  }
  j["mixture"] = mix;
  dump_json(j, path);
}

}  // namespace mbqp
