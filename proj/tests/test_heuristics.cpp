/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <algorithm>

#include "mbqp/cover.hpp"
#include "mbqp/heuristics.hpp"
#include "mbqp/relaxation.hpp"
#include "test_util.hpp"

using namespace mbqp;

namespace {

HeuristicConfig quick_config(double total = 5.0) {
  HeuristicConfig cfg = HeuristicConfig::scaled_defaults(total);
  return cfg;
}

}  // namespace

TEST_CASE("select_fix_set ranks by distance from one half") {
  const std::vector<double> xbar{1.0, 0.5, 0.9};
  const std::vector<int> cand{0, 1, 2};
  CHECK(select_fix_set(xbar, cand, 2.0 / 3.0) == std::vector<int>{0, 2});
  CHECK(select_fix_set(xbar, cand, 0.0).empty());
  CHECK(select_fix_set(xbar, cand, 1.0) == std::vector<int>{0, 2, 1});
}

TEST_CASE("select_fix_set breaks ties by lower index and is order-stable") {
  const std::vector<double> xbar{0.0, 1.0, 0.0, 1.0};
  const std::vector<int> cand{0, 1, 2, 3};
  CHECK(select_fix_set(xbar, cand, 0.5) == std::vector<int>{0, 1});
  const auto a = select_fix_set(xbar, cand, 0.75);
  const auto b = select_fix_set(xbar, cand, 0.75);
  CHECK(a == b);
  CHECK(a == std::vector<int>{0, 1, 2});
}

TEST_CASE("config validation") {
  HeuristicConfig cfg = HeuristicConfig::scaled_defaults(60.0);
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.relax_budget_s == doctest::Approx(20.0));
  CHECK(cfg.cover_budget_s == doctest::Approx(1.0));

  cfg.p = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.p = 0.7;
  cfg.relax_budget_s = 70.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("relax_search with p = 0 matches plain branch and bound") {
  Rng rng(83);
  for (int rep = 0; rep < 8; ++rep) {
    const Problem p = testutil::random_small_problem(rng, 6, 12);
    HeuristicConfig cfg = quick_config(10.0);
    cfg.p = 0.0;
    const HeuristicResult rs = relax_search(p, cfg);
    const BnbResult bnb = branch_and_bound(p, BnbConfig{});
    if (bnb.status == SolveStatus::Infeasible) {
      CHECK((rs.failure == FailureReason::RelaxationFailed ||
             rs.failure == FailureReason::SubproblemInfeasible));
      continue;
    }
    REQUIRE(rs.solution.has_value());
    CHECK(rs.solution->objective == bnb.solution.objective);
    CHECK(rs.fixed_set.empty());
  }
}

TEST_CASE("relax_search p = 0 trace matches branch and bound given the same warm start") {
  Rng rng(89);
  const Problem p = testutil::random_small_problem(rng, 8, 12);
  HeuristicConfig cfg = quick_config(10.0);
  cfg.p = 0.0;
  cfg.relaxation = RelaxKind::NLP;
  const HeuristicResult rs = relax_search(p, cfg);
  if (!rs.solution) return;

  // Reproduce the subsolve: same warm start (the rounded relaxation point).
  const RelaxationSolution rel = solve_nlp_relaxation(p, {}, NlpMode::FirstFeasible);
  REQUIRE(rel.status == SolveStatus::FeasibleSuboptimal);
  std::vector<double> warm = rel.x;
  for (int j : p.binaries) warm[j] = round_half_up(warm[j]);
  BnbConfig bc;
  bc.warm_start = warm;
  const BnbResult bnb = branch_and_bound(p, bc);

  REQUIRE(bnb.status == SolveStatus::Optimal);
  REQUIRE(rs.trace.entries().size() == bnb.trace.entries().size());
  for (std::size_t k = 0; k < rs.trace.entries().size(); ++k)
    CHECK(rs.trace.entries()[k].objective == bnb.trace.entries()[k].objective);
}

TEST_CASE("relax_search with p = 1 and a feasible rounding returns that rounding") {
  GenSpec spec;
  spec.family = Family::CQKP;
  spec.n = 14;
  spec.density = 0.4;
  spec.seed = 3;
  const Problem p = gen_instance(spec);

  HeuristicConfig cfg = quick_config(10.0);
  cfg.p = 1.0;
  cfg.relaxation = RelaxKind::NLP;  // first feasible point; its rounding stays feasible here
  const HeuristicResult rs = relax_search(p, cfg);
  REQUIRE(rs.solution.has_value());
  CHECK(static_cast<int>(rs.fixed_set.size()) == p.n);

  const RelaxationSolution rel = solve_nlp_relaxation(p, {}, NlpMode::FirstFeasible);
  std::vector<double> rounded = rel.x;
  for (int j : p.binaries) rounded[j] = round_half_up(rounded[j]);
  REQUIRE(check_feasibility(p, rounded).feasible);
  CHECK(rs.solution->objective == eval_objective(p, rounded));
}

TEST_CASE("relax_search never beats the exact optimum and matches it when roundings agree") {
  Rng rng(97);
  int agreements = 0;
  for (int rep = 0; rep < 10; ++rep) {
    GenSpec spec;
    spec.family = Family::CQKP;
    spec.n = 12;
    spec.density = 0.5;
    spec.seed = 100 + rep;
    const Problem p = gen_instance(spec);
    const Solution bf = brute_force(p);
    REQUIRE(bf.feasible);

    HeuristicConfig cfg = quick_config(10.0);
    cfg.p = 0.5;
    cfg.relaxation = RelaxKind::LP;
    const HeuristicResult rs = relax_search(p, cfg);
    if (!rs.solution) continue;
    CHECK(rs.solution->objective >= bf.objective - 1e-9);

    const RelaxationSolution rel = solve_lp_relaxation(p);
    bool agrees = true;
    for (int j : rs.fixed_set)
      if (round_half_up(rel.x[j]) != bf.x[j]) agrees = false;
    if (agrees) {
      ++agreements;
      CHECK(rs.solution->objective == doctest::Approx(bf.objective).epsilon(1e-12));
    }
  }
  CHECK(agreements >= 1);  // the check must actually trigger sometimes
}

TEST_CASE("cover_relax_search with a diagonal-only objective reduces to plain search") {
  Problem p;
  p.n = 6;
  p.c = {3.0, -5.0, 2.0, -1.0, 0.0, 4.0};
  p.quad = {{0, 0, -2.0}, {3, 3, 1.0}};
  p.lower.assign(6, 0.0);
  p.upper.assign(6, 1.0);
  p.binaries = {0, 1, 2, 3, 4, 5};

  HeuristicConfig cfg = quick_config(5.0);
  const HeuristicResult crs = cover_relax_search(p, cfg);
  REQUIRE(crs.solution.has_value());
  CHECK(crs.fixed_set.empty());
  const BnbResult bnb = branch_and_bound(p);
  CHECK(crs.solution->objective == bnb.solution.objective);
}

TEST_CASE("cover_relax_search with p = 1 leaves a bilinear-free subproblem") {
  Problem p;
  p.n = 3;
  p.c = {1.0, 1.0, 1.0};
  p.quad = {{0, 1, 2.0}, {1, 2, -3.0}};  // path graph, cover {1}
  p.lower.assign(3, 0.0);
  p.upper.assign(3, 1.0);
  p.binaries = {0, 1, 2};

  HeuristicConfig cfg = quick_config(5.0);
  cfg.p = 1.0;
  cfg.relaxation = RelaxKind::LP;
  const HeuristicResult crs = cover_relax_search(p, cfg);
  CHECK(crs.fixed_set == std::vector<int>{1});
  REQUIRE(crs.solution.has_value());
  // With variable 1 fixed, the free-variable objective is linear.
  const HessianGraph g = build_hessian_graph(p);
  for (const auto& [i, j] : g.edges) CHECK((i == 1 || j == 1));
}

TEST_CASE("rens fixes exactly the integral relaxation values") {
  // All-integral LP optimum: rens returns the relaxation point itself.
  Problem all_int;
  all_int.n = 4;
  all_int.c = {-1.0, -2.0, -3.0, -4.0};
  all_int.lower.assign(4, 0.0);
  all_int.upper.assign(4, 1.0);
  all_int.binaries = {0, 1, 2, 3};
  HeuristicConfig cfg = quick_config(5.0);
  cfg.relaxation = RelaxKind::LP;
  const HeuristicResult ri = rens_baseline(all_int, cfg);
  REQUIRE(ri.solution.has_value());
  CHECK(ri.fixed_set.size() == 4);
  CHECK(ri.solution->objective == -10.0);

  // Fractional-everywhere optimum: nothing is fixed, the subproblem is the
  // original problem.
  Problem frac;
  frac.n = 2;
  frac.c = {-1.0, -1.0};
  frac.lower.assign(2, 0.0);
  frac.upper.assign(2, 1.0);
  frac.binaries = {0, 1};
  SparseRow r1, r2;
  r1.idx = {0, 1};
  r1.val = {2.0, 1.0};
  r1.rhs = 1.0;
  r2.idx = {0, 1};
  r2.val = {1.0, 2.0};
  r2.rhs = 1.0;
  frac.rows = {r1, r2};
  const RelaxationSolution rel = solve_lp_relaxation(frac);
  CHECK(rel.x[0] == doctest::Approx(1.0 / 3.0));
  CHECK(rel.x[1] == doctest::Approx(1.0 / 3.0));
  const HeuristicResult rf = rens_baseline(frac, cfg);
  REQUIRE(rf.solution.has_value());
  CHECK(rf.fixed_set.empty());
  CHECK(rf.solution->objective == 0.0);  // only (0,0) is binary-feasible
}

TEST_CASE("rens fixed count equals the relaxation's integral count on a seeded instance") {
  GenSpec spec;
  spec.family = Family::CQKP;
  spec.n = 12;
  spec.density = 0.4;
  spec.seed = 10;  // this seed's LP relaxation is integral at 8 of 12 variables
  const Problem p = gen_instance(spec);

  const RelaxationSolution rel = solve_lp_relaxation(p);
  REQUIRE(rel.status == SolveStatus::Optimal);
  int integral = 0;
  for (int j = 0; j < p.n; ++j)
    if (std::min(std::abs(rel.x[j]), std::abs(rel.x[j] - 1.0)) <= 1e-6) ++integral;
  REQUIRE(integral == 8);

  HeuristicConfig cfg = quick_config(10.0);
  cfg.relaxation = RelaxKind::LP;
  const HeuristicResult rens = rens_baseline(p, cfg);
  CHECK(rens.fixed_set.size() == 8);
  REQUIRE(rens.solution.has_value());
}

TEST_CASE("undercover with an empty cover reduces to plain branch and bound") {
  Problem p;
  p.n = 5;
  p.c = {-1.0, 2.0, -3.0, 1.0, -2.0};
  p.quad = {{1, 1, -4.0}};
  p.lower.assign(5, 0.0);
  p.upper.assign(5, 1.0);
  p.binaries = {0, 1, 2, 3, 4};
  HeuristicConfig cfg = quick_config(5.0);
  cfg.relaxation = RelaxKind::LP;
  const HeuristicResult uc = undercover_baseline(p, cfg);
  REQUIRE(uc.solution.has_value());
  CHECK(uc.fixed_set.empty());
  CHECK(uc.solution->objective == branch_and_bound(p).solution.objective);
}

TEST_CASE("undercover equals cover_relax_search at p = 1 when the relaxation converges") {
  GenSpec spec;
  spec.family = Family::CQKP;
  spec.n = 12;
  spec.density = 0.3;
  spec.seed = 5;
  const Problem p = gen_instance(spec);

  HeuristicConfig cfg = quick_config(10.0);
  cfg.relaxation = RelaxKind::LP;
  cfg.p = 1.0;
  const HeuristicResult uc = undercover_baseline(p, cfg);
  const HeuristicResult crs = cover_relax_search(p, cfg);
  REQUIRE(uc.solution.has_value());
  REQUIRE(crs.solution.has_value());
  auto uc_fixed = uc.fixed_set;
  auto crs_fixed = crs.fixed_set;
  std::sort(uc_fixed.begin(), uc_fixed.end());
  std::sort(crs_fixed.begin(), crs_fixed.end());
  CHECK(uc_fixed == crs_fixed);
  CHECK(uc.solution->objective == crs.solution->objective);
}

TEST_CASE("undercover hand-solved path graph") {
  // Objective 2*x0*x1 - 4*x1*x2 + x0 - x2; cover {1}. With x1 fixed to its
  // rounded LP value the residual is linear in x0 and x2.
  Problem p;
  p.n = 3;
  p.c = {1.0, 0.0, -1.0};
  p.quad = {{0, 1, 1.0}, {1, 2, -2.0}};
  p.lower.assign(3, 0.0);
  p.upper.assign(3, 1.0);
  p.binaries = {0, 1, 2};

  HeuristicConfig cfg = quick_config(5.0);
  cfg.relaxation = RelaxKind::LP;
  const HeuristicResult uc = undercover_baseline(p, cfg);
  REQUIRE(uc.solution.has_value());
  CHECK(uc.fixed_set == std::vector<int>{1});
  const double x1 = uc.solution->x[1];
  // Residual hand solve: pick x0, x2 in {0,1} minimizing
  // (1 + 2 x1) x0 + (-1 - 4 x1) x2.
  const double expect = std::min(0.0, 1.0 + 2.0 * x1) + std::min(0.0, -1.0 - 4.0 * x1);
  CHECK(uc.solution->objective == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("all heuristics return only verified-feasible solutions") {
  Rng rng(101);
  int produced = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const Problem p = testutil::random_small_problem(rng, 15, 25);
    HeuristicConfig cfg = quick_config(2.0);
    cfg.p = std::vector<double>{0.0, 0.3, 0.7, 1.0}[rep % 4];
    cfg.relaxation = rep % 2 == 0 ? RelaxKind::LP : RelaxKind::NLP;
    for (int m = 0; m < 4; ++m) {
      const HeuristicResult hr = m == 0   ? relax_search(p, cfg)
                                 : m == 1 ? cover_relax_search(p, cfg)
                                 : m == 2 ? rens_baseline(p, cfg)
                                          : undercover_baseline(p, cfg);
      if (hr.solution) {
        CHECK(check_feasibility(p, hr.solution->x).feasible);
        ++produced;
      }
      const double budget_used = hr.relax_time_s + hr.cover_time_s + hr.subsolve_time_s;
      CHECK(budget_used <= cfg.total_limit_s + 0.5);
    }
  }
  CHECK(produced > 0);
}
