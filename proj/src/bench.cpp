/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/bench.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "mbqp/io.hpp"
#include "mbqp/rng.hpp"

namespace mbqp {

namespace fs = std::filesystem;
using nlohmann::json;

std::string MethodSpec::display_name() const {
  if (method == "bnb") return method;
  return method + (relaxation == RelaxKind::LP ? "-lp" : "-nlp");
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;

  BenchConfig cfg;
  cfg.instance_paths = j.at("instances").get<std::vector<std::string>>();
  if (cfg.instance_paths.empty()) throw std::runtime_error(path + ": no instances configured");
  for (const auto& m : j.at("methods")) {
    MethodSpec spec;
    spec.method = m.at("method").get<std::string>();
    if (spec.method != "bnb" && spec.method != "relax-search" &&
        spec.method != "cover-relax-search" && spec.method != "rens" &&
        spec.method != "undercover")
      throw std::runtime_error(path + ": unknown method '" + spec.method + "'");
    const std::string kind = m.value("relaxation", std::string("nlp"));
    if (kind != "lp" && kind != "nlp")
      throw std::runtime_error(path + ": relaxation must be 'lp' or 'nlp'");
    spec.relaxation = kind == "lp" ? RelaxKind::LP : RelaxKind::NLP;
    if (m.contains("p")) spec.p = m["p"].get<double>();
    cfg.methods.push_back(std::move(spec));
  }
  if (cfg.methods.empty()) throw std::runtime_error(path + ": no methods configured");
  cfg.time_limit_s = j.value("time_limit", 60.0);
  if (j.contains("relax_budget")) cfg.relax_budget_s = j["relax_budget"].get<double>();
  if (j.contains("cover_budget")) cfg.cover_budget_s = j["cover_budget"].get<double>();
  cfg.seed = j.value("seed", 1ULL);
  cfg.workers = j.value("workers", 1);
  cfg.out_dir = j.value("out_dir", std::string("bench-out"));
  return cfg;
}

namespace {

HeuristicResult run_method(const Problem& prob, const MethodSpec& spec, const BenchConfig& cfg,
                           std::uint64_t cell_seed) {
  if (spec.method == "bnb") {
    BnbConfig bc;
    bc.time_limit_s = cfg.time_limit_s;
    const StopWatch clock;
    BnbResult r = branch_and_bound(prob, bc);
    HeuristicResult hr;
    hr.subsolve_time_s = clock.elapsed_s();
    hr.subsolve_status = r.status;
    hr.trace = std::move(r.trace);
    if (r.status == SolveStatus::Optimal || r.status == SolveStatus::FeasibleSuboptimal)
      hr.solution = std::move(r.solution);
    else if (r.status == SolveStatus::Infeasible)
      hr.failure = FailureReason::SubproblemInfeasible;
    else
      hr.failure = FailureReason::SubsolveNoSolution;
    return hr;
  }

  HeuristicConfig hc = HeuristicConfig::scaled_defaults(cfg.time_limit_s);
  if (cfg.relax_budget_s) hc.relax_budget_s = *cfg.relax_budget_s;
  if (cfg.cover_budget_s) hc.cover_budget_s = *cfg.cover_budget_s;
  hc.relaxation = spec.relaxation;
  if (spec.p) hc.p = *spec.p;
  hc.seed = cell_seed;

  if (spec.method == "relax-search") return relax_search(prob, hc);
  if (spec.method == "cover-relax-search") return cover_relax_search(prob, hc);
  if (spec.method == "rens") return rens_baseline(prob, hc);
  return undercover_baseline(prob, hc);
}

std::string trace_filename(const std::string& instance, const std::string& method) {
  return instance + "__" + method + ".csv";
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  std::vector<Problem> instances;
  instances.reserve(config.instance_paths.size());
  for (const std::string& path : config.instance_paths) instances.push_back(read_instance(path));

  int workers = config.workers;
  if (const char* env = std::getenv("MBQP_WORKERS")) workers = std::max(1, std::atoi(env));

  const std::size_t n_cells = instances.size() * config.methods.size();
  std::vector<BenchCell> cells(n_cells);

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= n_cells) return;
      const std::size_t ii = k / config.methods.size();
      const std::size_t mi = k % config.methods.size();
      BenchCell& cell = cells[k];
      cell.instance = instances[ii].name.empty()
                          ? fs::path(config.instance_paths[ii]).stem().string()
                          : instances[ii].name;
      cell.method = config.methods[mi].display_name();
      const StopWatch clock;
      cell.result = run_method(instances[ii], config.methods[mi], config, mix_seed(config.seed, ii, mi));
      cell.total_time_s = clock.elapsed_s();
      if (cell.result.solution) cell.objective = cell.result.solution->objective;
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  BenchReport report;
  report.horizon_s = config.time_limit_s;
  report.cells = std::move(cells);

  for (std::size_t ii = 0; ii < instances.size(); ++ii) {
    std::vector<std::optional<double>> objs;
    for (std::size_t mi = 0; mi < config.methods.size(); ++mi)
      objs.push_back(report.cells[ii * config.methods.size() + mi].objective);
    report.best_known[report.cells[ii * config.methods.size()].instance] =
        compile_best_known(objs);
  }
  for (BenchCell& cell : report.cells) {
    const auto& vstar = report.best_known.at(cell.instance);
    cell.gap = primal_gap(cell.objective, vstar);
    cell.integral = primal_integral(cell.result.trace, vstar, config.time_limit_s);
  }
  for (const MethodSpec& m : config.methods) {
    const std::string name = m.display_name();
    double gsum = 0.0, isum = 0.0;
    int count = 0;
    for (const BenchCell& cell : report.cells) {
      if (cell.method != name) continue;
      gsum += cell.gap;
      isum += cell.integral;
      ++count;
    }
    report.mean_gap[name] = gsum / std::max(1, count);
    report.mean_integral[name] = isum / std::max(1, count);
  }

  fs::create_directories(fs::path(config.out_dir) / "traces");
  for (const BenchCell& cell : report.cells)
    write_trace_csv(cell.result.trace,
                    (fs::path(config.out_dir) / "traces" / trace_filename(cell.instance, cell.method))
                        .string());
  write_report_csv(report, (fs::path(config.out_dir) / "report.csv").string());
  return report;
}

void write_report_csv(const BenchReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.precision(17);
  out << "instance,method,status,objective,primal_gap,primal_integral,"
         "relax_time_s,cover_time_s,subsolve_time_s,total_time_s,fixed_count,failure\n";
  for (const BenchCell& c : report.cells) {
    const char* status = c.result.solution
                             ? to_string(c.result.subsolve_status)
                             : to_string(SolveStatus::NoSolutionTimeout);
    out << c.instance << "," << c.method << "," << status << ",";
    if (c.objective) out << *c.objective;
    out << "," << c.gap << "," << c.integral << "," << c.result.relax_time_s << ","
        << c.result.cover_time_s << "," << c.result.subsolve_time_s << "," << c.total_time_s << ","
        << c.result.fixed_set.size() << "," << to_string(c.result.failure) << "\n";
  }
  for (const auto& [method, gap] : report.mean_gap) {
    out << "__mean__," << method << ",,," << gap << "," << report.mean_integral.at(method)
        << ",,,,,,\n";
  }
}

BenchReport recompute_from_traces(const std::string& out_dir, double horizon_s) {
  BenchReport report;
  report.horizon_s = horizon_s;
  const fs::path traces = fs::path(out_dir) / "traces";
  if (!fs::is_directory(traces)) throw std::runtime_error(out_dir + ": no traces directory");

  struct Parsed {
    std::string instance, method;
    std::vector<TraceEntry> entries;
  };
  std::vector<Parsed> parsed;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(traces))
    if (entry.path().extension() == ".csv") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    const std::string stem = f.stem().string();
    const auto sep = stem.find("__");
    if (sep == std::string::npos) continue;
    parsed.push_back({stem.substr(0, sep), stem.substr(sep + 2), read_trace_csv(f.string())});
  }

  for (const Parsed& p : parsed) {
    auto& best = report.best_known[p.instance];
    if (!p.entries.empty()) {
      const double obj = p.entries.back().objective;
      if (!best || obj < *best) best = obj;
    }
  }
  for (const Parsed& p : parsed) {
    BenchCell cell;
    cell.instance = p.instance;
    cell.method = p.method;
    IncumbentTrace trace;
    for (const TraceEntry& e : p.entries) trace.record(e.time_s, e.objective);
    if (!p.entries.empty()) cell.objective = p.entries.back().objective;
    const auto& vstar = report.best_known.at(p.instance);
    cell.gap = primal_gap(cell.objective, vstar);
    cell.integral = primal_integral(trace, vstar, horizon_s);
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace mbqp
