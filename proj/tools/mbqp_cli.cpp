/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mbqp/bench.hpp"
#include "mbqp/instgen.hpp"
#include "mbqp/io.hpp"
#include "mbqp/metrics.hpp"
#include "mbqp/relaxation.hpp"
#include "mbqp/wflop.hpp"

namespace fs = std::filesystem;
using namespace mbqp;

namespace {

int cmd_gen(const std::string& family, int n, double density, int knapsacks, int count,
            std::uint64_t seed, const std::string& outdir) {
  fs::create_directories(outdir);
  for (int k = 0; k < count; ++k) {
    GenSpec spec;
    spec.family = family_from_string(family);
    spec.n = n;
    spec.density = density;
    spec.n_knapsack = knapsacks;
    spec.seed = seed + static_cast<std::uint64_t>(k);
    const Problem p = gen_instance(spec);
    const std::string path = (fs::path(outdir) / (p.name + ".json")).string();
    write_instance(p, path);
    std::printf("wrote %s\n", path.c_str());
  }
  return 0;
}

int cmd_wflop_gen(int nx, int ny, double spacing, int turbines, int scenarios,
                  const std::string& dist_path, std::uint64_t seed, const std::string& outdir) {
  WflopSpec spec;
  spec.grid = Grid::regular(nx, ny, spacing);
  spec.turbine_count = turbines;
  if (!dist_path.empty() && fs::path(dist_path).extension() == ".csv") {
    spec.scenarios = read_scenario_csv(dist_path);
  } else {
    WindDistribution dist;
    if (!dist_path.empty()) dist = read_distribution_json(dist_path);
    spec.scenarios = sample_scenarios(dist, scenarios, seed);
  }
  Problem p = build_wflop_problem(spec);
  p.name += "_s" + std::to_string(seed);
  fs::create_directories(outdir);
  const std::string path = (fs::path(outdir) / (p.name + ".json")).string();
  write_instance(p, path, &spec.grid.coords);
  std::printf("wrote %s (%zu bilinear terms)\n", path.c_str(), p.quad.size());
  return 0;
}

int cmd_solve(const std::string& instance, const std::string& method, const std::string& relaxation,
              double p_ratio, std::optional<double> tr, std::optional<double> tc,
              double time_limit, std::uint64_t seed, const std::string& trace_out) {
  const Problem prob = read_instance(instance);

  HeuristicResult hr;
  if (method == "bnb") {
    BnbConfig bc;
    bc.time_limit_s = time_limit;
    const StopWatch clock;
    BnbResult r = branch_and_bound(prob, bc);
    hr.subsolve_time_s = clock.elapsed_s();
    hr.subsolve_status = r.status;
    hr.trace = std::move(r.trace);
    if (r.status == SolveStatus::Optimal || r.status == SolveStatus::FeasibleSuboptimal)
      hr.solution = std::move(r.solution);
  } else {
    HeuristicConfig cfg = HeuristicConfig::scaled_defaults(time_limit);
    cfg.p = p_ratio;
    if (tr) cfg.relax_budget_s = *tr;
    if (tc) cfg.cover_budget_s = *tc;
    cfg.relaxation = relaxation == "lp" ? RelaxKind::LP : RelaxKind::NLP;
    cfg.seed = seed;
    if (method == "relax-search")
      hr = relax_search(prob, cfg);
    else if (method == "cover-relax-search")
      hr = cover_relax_search(prob, cfg);
    else if (method == "rens")
      hr = rens_baseline(prob, cfg);
    else if (method == "undercover")
      hr = undercover_baseline(prob, cfg);
    else {
      std::fprintf(stderr, "unknown method '%s'\n", method.c_str());
      return 2;
    }
  }

  std::printf("instance   %s\n", prob.name.c_str());
  std::printf("method     %s\n", method.c_str());
  if (hr.solution) {
    std::printf("status     %s\n", to_string(hr.subsolve_status));
    std::printf("objective  %.10g\n", hr.solution->objective);
  } else {
    std::printf("status     failed (%s)\n", to_string(hr.failure));
  }
  std::printf("times      relax=%.3fs cover=%.3fs subsolve=%.3fs\n", hr.relax_time_s,
              hr.cover_time_s, hr.subsolve_time_s);
  std::printf("fixed      %zu variables\n", hr.fixed_set.size());
  std::printf("incumbents %zu\n", hr.trace.entries().size());
  if (!trace_out.empty()) {
    write_trace_csv(hr.trace, trace_out);
    std::printf("trace      %s\n", trace_out.c_str());
  }
  return hr.solution ? 0 : 1;
}

int cmd_bench(const std::string& config_path) {
  const BenchConfig cfg = load_bench_config(config_path);
  const BenchReport report = run_bench(cfg);
  std::printf("%-28s %12s %14s\n", "method", "mean gap", "mean integral");
  for (const auto& [method, gap] : report.mean_gap)
    std::printf("%-28s %12.4f %14.4f\n", method.c_str(), gap, report.mean_integral.at(method));
  std::printf("report: %s/report.csv\n", cfg.out_dir.c_str());
  return 0;
}

int cmd_report(const std::string& dir, double horizon) {
  const BenchReport report = recompute_from_traces(dir, horizon);
  const std::string path = (fs::path(dir) / "report_recomputed.csv").string();
  write_report_csv(report, path);
  std::printf("recomputed %zu rows -> %s\n", report.cells.size(), path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed binary quadratic programming heuristics toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate synthetic benchmark instances");
  std::string family = "cqkp", outdir = "instances";
  int n = 100, knapsacks = 50, count = 1;
  double density = 0.1;
  std::uint64_t seed = 1;
  gen->add_option("--family", family, "cbqp, cqkp, or qmkp");
  gen->add_option("--n", n, "number of binary variables");
  gen->add_option("--density", density, "bilinear term density in (0,1]");
  gen->add_option("--knapsacks", knapsacks, "knapsack rows (qmkp)");
  gen->add_option("--count", count, "instances to generate (seeds seed..seed+count-1)");
  gen->add_option("--seed", seed, "base seed");
  gen->add_option("--outdir", outdir, "output directory");

  // wflop-gen
  auto* wg = app.add_subcommand("wflop-gen", "Build a wind farm layout instance");
  int nx = 10, ny = 10, turbines = 10, scenarios = 1;
  double spacing = 200.0;
  std::string dist_path, wf_outdir = "instances";
  std::uint64_t wf_seed = 1;
  wg->add_option("--nx", nx, "grid columns");
  wg->add_option("--ny", ny, "grid rows");
  wg->add_option("--spacing", spacing, "grid spacing in meters");
  wg->add_option("--k", turbines, "turbines to place");
  wg->add_option("--m", scenarios, "wind scenarios to sample");
  wg->add_option("--dist", dist_path, "distribution spec (.json) or scenario list (.csv)");
  wg->add_option("--seed", wf_seed, "sampling seed");
  wg->add_option("--outdir", wf_outdir, "output directory");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one method on one instance");
  std::string instance, method = "relax-search", relaxation = "nlp", trace_out;
  double p_ratio = 0.7, time_limit = 60.0;
  std::optional<double> tr, tc;
  std::uint64_t solve_seed = 1;
  solve->add_option("--instance", instance, "instance file")->required();
  solve->add_option("--method", method, "bnb, relax-search, cover-relax-search, rens, undercover");
  solve->add_option("--relaxation", relaxation, "lp or nlp");
  solve->add_option("--p", p_ratio, "fixing ratio");
  solve->add_option("--tr", tr, "relaxation budget seconds");
  solve->add_option("--tc", tc, "cover budget seconds");
  solve->add_option("--time-limit", time_limit, "total wall-clock budget seconds");
  solve->add_option("--seed", solve_seed, "run seed");
  solve->add_option("--trace-out", trace_out, "write the incumbent trace CSV here");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite from a JSON config");
  std::string bench_config;
  bench->add_option("--config", bench_config, "suite config file")->required();

  // report
  auto* rep = app.add_subcommand("report", "Recompute aggregates from trace files");
  std::string report_dir;
  double horizon = 60.0;
  rep->add_option("--dir", report_dir, "bench output directory")->required();
  rep->add_option("--horizon", horizon, "integral horizon seconds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(family, n, density, knapsacks, count, seed, outdir);
    if (*wg) return cmd_wflop_gen(nx, ny, spacing, turbines, scenarios, dist_path, wf_seed, wf_outdir);
    if (*solve)
      return cmd_solve(instance, method, relaxation, p_ratio, tr, tc, time_limit, solve_seed,
                       trace_out);
    if (*bench) return cmd_bench(bench_config);
    if (*rep) return cmd_report(report_dir, horizon);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
