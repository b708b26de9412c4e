/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mbqp/relaxation.hpp"

namespace mbqp {

void IncumbentTrace::record(double time_s, double objective) {
  if (!entries_.empty()) {
    if (objective >= entries_.back().objective)
      throw std::logic_error("incumbent trace: objectives must strictly decrease");
    if (time_s <= entries_.back().time_s) time_s = entries_.back().time_s + 1e-9;
  }
  if (time_s < 0) time_s = 0;
  entries_.push_back({time_s, objective});
}

std::optional<double> IncumbentTrace::best() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.back().objective;
}

namespace {

constexpr double kPruneMargin = 1e-9;

struct Node {
  std::vector<std::pair<int, char>> fixes;  // (binary variable, value)
  double bound = -kInf;                     // parent LP bound
};

struct Worker {
  const Problem& prob;
  const BnbConfig& cfg;
  LinearizedProblem lin;
  Deadline deadline;
  StopWatch trace_clock;
  StopWatch solve_clock;

  std::optional<Solution> incumbent;
  IncumbentTrace trace;
  std::vector<Node> open;
  std::int64_t nodes = 0;

  Worker(const Problem& p, const BnbConfig& c)
      : prob(p), cfg(c), lin(mccormick_linearize(p)),
        deadline(Deadline::after(c.time_limit_s)),
        trace_clock(c.trace_origin.value_or(std::chrono::steady_clock::now())) {
    if (c.time_limit_s == kInf) deadline = Deadline();
  }

  double incumbent_obj() const { return incumbent ? incumbent->objective : kInf; }

  // Flip/swap descent over the free binaries, first improvement.
  void polish(std::vector<double>& x, double& obj) {
    std::vector<int> free_bins;
    for (int j : prob.binaries)
      if (prob.upper[j] - prob.lower[j] > 0.5) free_bins.push_back(j);
    if (free_bins.empty()) return;
    bool improved = true;
    int passes = 0;
    while (improved && passes++ < 100 && !deadline.expired()) {
      improved = false;
      for (int j : free_bins) {
        x[j] = 1.0 - x[j];
        const double cand = eval_objective(prob, x);
        if (cand < obj - 1e-12 && check_feasibility(prob, x, cfg.feas_tol).feasible) {
          obj = cand;
          improved = true;
        } else {
          x[j] = 1.0 - x[j];
        }
      }
      for (int a : free_bins) {
        if (x[a] < 0.5) continue;
        for (int b : free_bins) {
          if (x[b] > 0.5) continue;
          x[a] = 0.0;
          x[b] = 1.0;
          const double cand = eval_objective(prob, x);
          if (cand < obj - 1e-12 && check_feasibility(prob, x, cfg.feas_tol).feasible) {
            obj = cand;
            improved = true;
            break;  // x[a] changed; move to the next donor
          }
          x[a] = 1.0;
          x[b] = 0.0;
        }
      }
    }
  }

  // Installs x as incumbent when it is feasible and strictly better.
  void offer(std::vector<double> x, bool run_polish) {
    for (int j : prob.binaries) x[j] = round_half_up(x[j]);
    if (!check_feasibility(prob, x, cfg.feas_tol).feasible) return;
    const double obj = eval_objective(prob, x);
    if (obj >= incumbent_obj()) return;
    accept(std::move(x), obj, run_polish);
  }

  void accept(std::vector<double> x, double obj, bool run_polish) {
    trace.record(trace_clock.elapsed_s(), obj);
    incumbent = Solution{x, obj, true, solve_clock.elapsed_s()};
    if (run_polish && cfg.polish_incumbents) {
      polish(x, obj);
      if (obj < incumbent->objective) {
        trace.record(trace_clock.elapsed_s(), obj);
        incumbent = Solution{std::move(x), obj, true, solve_clock.elapsed_s()};
      }
    }
  }

  // Bounds of the node problem in the linearized space.
  void node_bounds(const Node& node, std::vector<double>& lo, std::vector<double>& hi) const {
    lo = prob.lower;
    hi = prob.upper;
    for (const auto& [j, v] : node.fixes) {
      lo[j] = static_cast<double>(v);
      hi[j] = static_cast<double>(v);
    }
  }

  int pick_branch_var(const std::vector<double>& x, const std::vector<double>& lo,
                      const std::vector<double>& hi) const {
    int best = -1;
    double best_score = kInf;
    for (int j : prob.binaries) {
      if (hi[j] - lo[j] <= 0.5) continue;
      const double frac = std::min(std::abs(x[j]), std::abs(x[j] - 1.0));
      if (frac <= cfg.int_tol) continue;
      const double score = std::abs(x[j] - 0.5);
      if (score < best_score - 1e-15) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  int first_free_binary(const std::vector<double>& lo, const std::vector<double>& hi) const {
    for (int j : prob.binaries)
      if (hi[j] - lo[j] > 0.5) return j;
    return -1;
  }

  std::size_t pop_best_bound() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < open.size(); ++k)
      if (open[k].bound < open[best].bound) best = k;
    return best;
  }

  BnbResult run() {
    if (cfg.warm_start && static_cast<int>(cfg.warm_start->size()) == prob.n) {
      std::vector<double> w = *cfg.warm_start;
      for (int j : prob.binaries) w[j] = round_half_up(w[j]);
      if (check_feasibility(prob, w, cfg.feas_tol).feasible) {
        const double wobj = eval_objective(prob, w);
        accept(std::move(w), wobj, true);
      }
    }

    open.push_back(Node{});
    std::optional<Node> plunge;
    bool timed_out = false;

    std::vector<double> lo, hi;
    while (true) {
      if (deadline.expired()) {
        timed_out = true;
        break;
      }
      Node node;
      if (plunge) {
        node = std::move(*plunge);
        plunge.reset();
      } else if (!open.empty()) {
        const std::size_t k = pop_best_bound();
        node = std::move(open[k]);
        open.erase(open.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        break;  // tree exhausted
      }
      if (node.bound >= incumbent_obj() - kPruneMargin) continue;
      ++nodes;

      node_bounds(node, lo, hi);
      const RelaxationSolution lp = solve_lp_relaxation(lin, lo, hi, deadline);
      if (lp.status == SolveStatus::Infeasible) continue;
      if (lp.x.empty()) {
        if (deadline.expired()) {
          timed_out = true;
          break;
        }
        // Numerical breakdown: resolve the node without a bound.
        const int j = first_free_binary(lo, hi);
        if (j < 0) continue;
        Node down{node.fixes, node.bound};
        down.fixes.emplace_back(j, 0);
        Node up{std::move(node.fixes), node.bound};
        up.fixes.emplace_back(j, 1);
        open.push_back(std::move(up));
        plunge = std::move(down);
        continue;
      }

      const bool bound_valid = lp.status == SolveStatus::Optimal;
      const double bound = bound_valid ? lp.objective : node.bound;
      if (bound_valid && bound >= incumbent_obj() - kPruneMargin) continue;

      const int branch_j = pick_branch_var(lp.x, lo, hi);
      if (branch_j < 0) {
        // Integral LP point: leaf.
        offer(lp.x, true);
        continue;
      }
      offer(lp.x, false);  // node rounding heuristic

      const char up_first = lp.x[branch_j] >= 0.5 ? 1 : 0;
      Node follow{node.fixes, bound};
      follow.fixes.emplace_back(branch_j, up_first);
      Node other{std::move(node.fixes), bound};
      other.fixes.emplace_back(branch_j, static_cast<char>(1 - up_first));
      open.push_back(std::move(other));
      plunge = std::move(follow);
    }

    BnbResult res;
    res.nodes = nodes;
    res.trace = std::move(trace);
    if (timed_out) {
      res.status = incumbent ? SolveStatus::FeasibleSuboptimal : SolveStatus::NoSolutionTimeout;
      double lb = incumbent ? incumbent_obj() : kInf;
      for (const Node& nd : open) lb = std::min(lb, nd.bound);
      if (plunge) lb = std::min(lb, plunge->bound);
      res.lower_bound = lb;
    } else {
      res.status = incumbent ? SolveStatus::Optimal : SolveStatus::Infeasible;
      res.lower_bound = incumbent ? incumbent->objective : kInf;
    }
    if (incumbent) {
      res.solution = std::move(*incumbent);
      res.solution.wall_time = solve_clock.elapsed_s();
    }
    return res;
  }
};

}  // namespace

BnbResult branch_and_bound(const Problem& p, const BnbConfig& config) {
  p.validate();
  if (config.time_limit_s < 0) throw std::invalid_argument("branch_and_bound: negative deadline");
  Worker w(p, config);
  return w.run();
}

Solution brute_force(const Problem& p) {
  p.validate();
  StopWatch watch;
  std::vector<int> free_bins;
  for (int j : p.binaries)
    if (p.upper[j] - p.lower[j] > 0.5) free_bins.push_back(j);
  if (free_bins.size() > 24)
    throw std::invalid_argument("brute_force: more than 24 free binary variables");
  if (static_cast<int>(p.binaries.size()) != p.n)
    throw std::invalid_argument("brute_force: continuous variables are unsupported");

  std::vector<double> x = p.lower;  // fixed binaries sit at their bound
  Solution best;
  best.feasible = false;
  const std::uint64_t count = 1ULL << free_bins.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t k = 0; k < free_bins.size(); ++k)
      x[free_bins[k]] = (mask >> k) & 1ULL ? 1.0 : 0.0;
    if (!check_feasibility(p, x, kDefaultFeasTol).feasible) continue;
    const double obj = eval_objective(p, x);
    if (!best.feasible || obj < best.objective) {
      best.x = x;
      best.objective = obj;
      best.feasible = true;
    }
  }
  best.wall_time = watch.elapsed_s();
  return best;
}

}  // namespace mbqp
