/*
 * SPDX-License-Identifier: Apache-2.0
 */
#include "mbqp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <optional>
#include <stdexcept>

namespace mbqp {
namespace {

constexpr double kPivTol = 1e-8;    // minimum acceptable pivot magnitude
constexpr double kCostTol = 1e-9;   // reduced-cost optimality threshold
constexpr double kRatioTie = 1e-12;
constexpr double kPhase1Tol = 1e-7;
constexpr int kBlandTrigger = 50;
constexpr std::size_t kTableauByteCap = std::size_t{1} << 31;  // 2 GiB dense-tableau limit

struct Reduced {
  bool infeasible = false;
  std::vector<int> kept;              // reduced index -> original index
  std::vector<double> fixed;          // per original var; meaningful where is_fixed
  std::vector<char> is_fixed;
  std::vector<double> c, lo, hi;      // reduced arrays
  std::vector<SparseRow> rows;        // over reduced indices
};

// Substitutes fixed variables, removes singleton and redundant rows, and
// detects forcing rows. Keeps the LP small at deeply fixed subproblems.
Reduced presolve(const std::vector<double>& c, const std::vector<SparseRow>& rows,
                 std::vector<double> lo, std::vector<double> hi) {
  const int n = static_cast<int>(c.size());
  Reduced red;
  red.fixed.assign(n, 0.0);
  red.is_fixed.assign(n, 0);
  std::vector<char> row_alive(rows.size(), 1);

  auto fix_var = [&](int j, double v) {
    lo[j] = v;
    hi[j] = v;
  };

  for (int j = 0; j < n; ++j) {
    if (lo[j] > hi[j] + 1e-9) {
      red.infeasible = true;
      return red;
    }
  }

  bool changed = true;
  for (int pass = 0; pass < 50 && changed; ++pass) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      if (!red.is_fixed[j] && hi[j] - lo[j] <= 1e-12) {
        red.is_fixed[j] = 1;
        red.fixed[j] = lo[j];
        changed = true;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!row_alive[r]) continue;
      const SparseRow& row = rows[r];
      double cst = 0.0, minact = 0.0, maxact = 0.0;
      int nfree = 0, last_j = -1;
      double last_a = 0.0;
      for (std::size_t k = 0; k < row.idx.size(); ++k) {
        const int j = row.idx[k];
        const double a = row.val[k];
        if (a == 0.0) continue;
        if (red.is_fixed[j]) {
          cst += a * red.fixed[j];
        } else {
          ++nfree;
          last_j = j;
          last_a = a;
          if (a > 0) {
            minact += a * lo[j];
            maxact += a * hi[j];
          } else {
            minact += a * hi[j];
            maxact += a * lo[j];
          }
        }
      }
      const double rh = row.rhs - cst;
      if (row.sense == RowSense::LessEqual) {
        if (minact > rh + kPhase1Tol) {
          red.infeasible = true;
          return red;
        }
        if (nfree == 0 || maxact <= rh + 1e-12) {
          row_alive[r] = 0;
          changed = true;
          continue;
        }
        if (nfree == 1) {
          if (last_a > 0)
            hi[last_j] = std::min(hi[last_j], rh / last_a);
          else
            lo[last_j] = std::max(lo[last_j], rh / last_a);
          if (lo[last_j] > hi[last_j] + 1e-9) {
            red.infeasible = true;
            return red;
          }
          if (lo[last_j] > hi[last_j]) hi[last_j] = lo[last_j];
          row_alive[r] = 0;
          changed = true;
          continue;
        }
        if (minact >= rh - 1e-12) {
          // Forcing: the row holds only when every free variable sits at its
          // minimum-activity bound.
          for (std::size_t k = 0; k < row.idx.size(); ++k) {
            const int j = row.idx[k];
            const double a = row.val[k];
            if (a == 0.0 || red.is_fixed[j]) continue;
            fix_var(j, a > 0 ? lo[j] : hi[j]);
          }
          row_alive[r] = 0;
          changed = true;
          continue;
        }
      } else {  // Equal
        if (minact > rh + kPhase1Tol || maxact < rh - kPhase1Tol) {
          red.infeasible = true;
          return red;
        }
        if (nfree == 0) {
          row_alive[r] = 0;
          changed = true;
          continue;
        }
        if (nfree == 1) {
          const double v = rh / last_a;
          if (v < lo[last_j] - 1e-7 || v > hi[last_j] + 1e-7) {
            red.infeasible = true;
            return red;
          }
          fix_var(last_j, std::clamp(v, lo[last_j], hi[last_j]));
          row_alive[r] = 0;
          changed = true;
          continue;
        }
        if (minact >= rh - 1e-12) {
          for (std::size_t k = 0; k < row.idx.size(); ++k) {
            const int j = row.idx[k];
            const double a = row.val[k];
            if (a == 0.0 || red.is_fixed[j]) continue;
            fix_var(j, a > 0 ? lo[j] : hi[j]);
          }
          row_alive[r] = 0;
          changed = true;
          continue;
        }
        if (maxact <= rh + 1e-12) {
          for (std::size_t k = 0; k < row.idx.size(); ++k) {
            const int j = row.idx[k];
            const double a = row.val[k];
            if (a == 0.0 || red.is_fixed[j]) continue;
            fix_var(j, a > 0 ? hi[j] : lo[j]);
          }
          row_alive[r] = 0;
          changed = true;
          continue;
        }
      }
    }
  }

  std::vector<int> map(n, -1);
  for (int j = 0; j < n; ++j) {
    if (!red.is_fixed[j]) {
      map[j] = static_cast<int>(red.kept.size());
      red.kept.push_back(j);
      red.c.push_back(c[j]);
      red.lo.push_back(lo[j]);
      red.hi.push_back(hi[j]);
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!row_alive[r]) continue;
    const SparseRow& row = rows[r];
    SparseRow out;
    out.sense = row.sense;
    double cst = 0.0;
    for (std::size_t k = 0; k < row.idx.size(); ++k) {
      const int j = row.idx[k];
      const double a = row.val[k];
      if (a == 0.0) continue;
      if (red.is_fixed[j]) {
        cst += a * red.fixed[j];
      } else {
        out.idx.push_back(map[j]);
        out.val.push_back(a);
      }
    }
    out.rhs = row.rhs - cst;
    red.rows.push_back(std::move(out));
  }
  return red;
}

enum class VarState : char { Basic, AtLower, AtUpper };

enum class RunOutcome { Optimal, Deadline, IterLimit, Breakdown };

// Dense bounded-variable simplex over the reduced LP. The tableau carries
// B^{-1}A plus a trailing B^{-1}b column used to refresh basic values.
class Tableau {
 public:
  Tableau(const Reduced& lp, const Deadline& deadline)
      : lp_(lp), deadline_(deadline), m_(static_cast<int>(lp.rows.size())),
        nstruct_(static_cast<int>(lp.c.size())) {
    build();
  }

  bool infeasible_detected() const { return infeasible_; }
  bool phase1_needed() const { return n_art_ > 0; }

  RunOutcome run_phase1() {
    phase_ = 1;
    cost_.assign(width_, 0.0);
    for (int j = art_begin_; j < ncols_; ++j) cost_[j] = 1.0;
    recompute_reduced_costs();
    const RunOutcome out = iterate();
    if (out != RunOutcome::Optimal) return out;
    double infeas = 0.0;
    for (int i = 0; i < m_; ++i)
      if (basis_[i] >= art_begin_) infeas += xb_[i];
    if (infeas > kPhase1Tol) infeasible_ = true;
    // Pin artificials at zero so they can never re-enter or move.
    for (int j = art_begin_; j < ncols_; ++j) {
      lo_[j] = 0.0;
      hi_[j] = 0.0;
    }
    return RunOutcome::Optimal;
  }

  RunOutcome run_phase2() {
    phase_ = 2;
    cost_.assign(width_, 0.0);
    for (int j = 0; j < nstruct_; ++j) cost_[j] = lp_.c[j];
    recompute_reduced_costs();
    return iterate();
  }

  int phase() const { return phase_; }

  std::vector<double> extract() const {
    std::vector<double> x(nstruct_);
    for (int j = 0; j < nstruct_; ++j) {
      switch (state_[j]) {
        case VarState::AtLower: x[j] = lo_[j]; break;
        case VarState::AtUpper: x[j] = hi_[j]; break;
        case VarState::Basic: x[j] = 0.0; break;
      }
    }
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < nstruct_) x[basis_[i]] = xb_[i];
    for (int j = 0; j < nstruct_; ++j) x[j] = std::clamp(x[j], lp_.lo[j], lp_.hi[j]);
    return x;
  }

 private:
  void build() {
    int nslack = 0;
    for (const SparseRow& r : lp_.rows)
      if (r.sense == RowSense::LessEqual) ++nslack;

    slack_col_.assign(m_, -1);
    // Column layout: structurals, slacks, artificials (added as needed).
    int next = nstruct_;
    for (int i = 0; i < m_; ++i)
      if (lp_.rows[i].sense == RowSense::LessEqual) slack_col_[i] = next++;
    art_begin_ = next;

    std::vector<double> resid(m_);
    std::vector<int> art_col(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const SparseRow& row = lp_.rows[i];
      double act = 0.0;
      for (std::size_t k = 0; k < row.idx.size(); ++k) act += row.val[k] * lp_.lo[row.idx[k]];
      resid[i] = row.rhs - act;
      const bool needs_art = row.sense == RowSense::Equal || resid[i] < 0.0;
      if (needs_art) art_col[i] = next++;
    }
    ncols_ = next;
    n_art_ = ncols_ - art_begin_;
    width_ = ncols_ + 1;  // trailing B^{-1}b column

    lo_.assign(ncols_, 0.0);
    hi_.assign(ncols_, kInf);
    state_.assign(ncols_, VarState::AtLower);
    for (int j = 0; j < nstruct_; ++j) {
      lo_[j] = lp_.lo[j];
      hi_[j] = lp_.hi[j];
    }

    T_.assign(static_cast<std::size_t>(m_) * width_, 0.0);
    basis_.assign(m_, -1);
    xb_.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      const SparseRow& row = lp_.rows[i];
      const double sigma = (art_col[i] >= 0 && resid[i] < 0.0) ? -1.0 : 1.0;
      double* tr = row_ptr(i);
      for (std::size_t k = 0; k < row.idx.size(); ++k) tr[row.idx[k]] += sigma * row.val[k];
      if (slack_col_[i] >= 0) tr[slack_col_[i]] = sigma;
      if (art_col[i] >= 0) tr[art_col[i]] = 1.0;
      tr[ncols_] = sigma * row.rhs;
      if (art_col[i] >= 0) {
        basis_[i] = art_col[i];
        xb_[i] = std::abs(resid[i]);
      } else {
        basis_[i] = slack_col_[i];
        xb_[i] = resid[i];
      }
      state_[basis_[i]] = VarState::Basic;
    }
    dj_.assign(ncols_, 0.0);
  }

  double* row_ptr(int i) { return T_.data() + static_cast<std::size_t>(i) * width_; }
  const double* row_ptr(int i) const { return T_.data() + static_cast<std::size_t>(i) * width_; }

  void recompute_reduced_costs() {
    dj_.assign(ncols_, 0.0);
    for (int j = 0; j < ncols_; ++j) dj_[j] = cost_[j];
    for (int i = 0; i < m_; ++i) {
      const double cb = cost_[basis_[i]];
      if (cb == 0.0) continue;
      const double* tr = row_ptr(i);
      for (int j = 0; j < ncols_; ++j) dj_[j] -= cb * tr[j];
    }
  }

  void refresh_basic_values() {
    for (int i = 0; i < m_; ++i) {
      const double* tr = row_ptr(i);
      double v = tr[ncols_];
      for (int j = 0; j < ncols_; ++j) {
        if (state_[j] == VarState::Basic) continue;
        const double xj = state_[j] == VarState::AtLower ? lo_[j] : hi_[j];
        if (xj != 0.0) v -= tr[j] * xj;
      }
      xb_[i] = v;
    }
  }

  bool enterable(int j, double* score) const {
    if (state_[j] == VarState::Basic) return false;
    if (hi_[j] - lo_[j] <= 0.0) return false;  // pinned (fixed or retired artificial)
    if (state_[j] == VarState::AtLower) {
      if (dj_[j] < -kCostTol) {
        *score = -dj_[j];
        return true;
      }
    } else {
      if (dj_[j] > kCostTol) {
        *score = dj_[j];
        return true;
      }
    }
    return false;
  }

  RunOutcome iterate() {
    int degen_run = 0;
    bool bland = false;
    for (long pivots = 0;; ++pivots) {
      if (pivots >= max_pivots()) return RunOutcome::IterLimit;
      if (deadline_.expired()) return RunOutcome::Deadline;
      if ((pivots & 0xFF) == 0xFF) {
        refresh_basic_values();
        recompute_reduced_costs();
      }

      // Pricing.
      int q = -1;
      double best = 0.0;
      for (int j = 0; j < ncols_; ++j) {
        double score;
        if (!enterable(j, &score)) continue;
        if (bland) {
          q = j;
          break;
        }
        if (score > best + 1e-15) {
          best = score;
          q = j;
        }
      }
      if (q < 0) return RunOutcome::Optimal;

      const double dir = state_[q] == VarState::AtLower ? 1.0 : -1.0;
      // Ratio test.
      double t = hi_[q] - lo_[q];  // bound-flip distance (may be inf)
      int r = -1;
      double r_piv = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double a = dir * row_ptr(i)[q];
        double ti;
        if (a > kPivTol) {
          ti = (xb_[i] - lo_[basis_[i]]) / a;
        } else if (a < -kPivTol) {
          if (hi_[basis_[i]] == kInf) continue;
          ti = (hi_[basis_[i]] - xb_[i]) / (-a);
        } else {
          continue;
        }
        if (ti < 0.0) ti = 0.0;
        const double mag = std::abs(row_ptr(i)[q]);
        if (ti < t - kRatioTie) {
          t = ti;
          r = i;
          r_piv = mag;
        } else if (r >= 0 && ti <= t + kRatioTie) {
          if (bland) {
            if (basis_[i] < basis_[r]) {
              r = i;
              r_piv = mag;
            }
          } else if (mag > r_piv + 1e-12 ||
                     (std::abs(mag - r_piv) <= 1e-12 && basis_[i] < basis_[r])) {
            r = i;
            r_piv = mag;
          }
        }
      }

      if (t == kInf) return RunOutcome::Breakdown;  // cannot happen with finite structural bounds
      if (r >= 0 && r_piv < kPivTol) return RunOutcome::Breakdown;

      if (t <= kRatioTie)
        ++degen_run;
      else
        degen_run = 0;
      if (degen_run >= kBlandTrigger) bland = true;

      if (r < 0) {
        // Bound flip: q moves across its range, basis unchanged.
        for (int i = 0; i < m_; ++i) xb_[i] -= dir * t * row_ptr(i)[q];
        state_[q] = state_[q] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        continue;
      }

      const int leaving = basis_[r];
      const double enter_val = (dir > 0 ? lo_[q] : hi_[q]) + dir * t;
      for (int i = 0; i < m_; ++i)
        if (i != r) xb_[i] -= dir * t * row_ptr(i)[q];
      state_[leaving] = dir * row_ptr(r)[q] > 0 ? VarState::AtLower : VarState::AtUpper;
      if (hi_[leaving] - lo_[leaving] <= 0.0) state_[leaving] = VarState::AtLower;
      basis_[r] = q;
      state_[q] = VarState::Basic;
      xb_[r] = enter_val;

      // Gauss-Jordan update of the tableau and the reduced-cost row.
      double* pr = row_ptr(r);
      const double piv = pr[q];
      const double inv = 1.0 / piv;
      for (int j = 0; j < width_; ++j) pr[j] *= inv;
      pr[q] = 1.0;
      for (int i = 0; i < m_; ++i) {
        if (i == r) continue;
        double* ti_row = row_ptr(i);
        const double f = ti_row[q];
        if (f == 0.0) continue;
        for (int j = 0; j < width_; ++j) ti_row[j] -= f * pr[j];
        ti_row[q] = 0.0;
      }
      const double fd = dj_[q];
      if (fd != 0.0) {
        for (int j = 0; j < ncols_; ++j) dj_[j] -= fd * pr[j];
        dj_[q] = 0.0;
      }
    }
  }

  long max_pivots() const { return 20000L + 200L * (m_ + ncols_); }

  const Reduced& lp_;
  Deadline deadline_;
  int m_ = 0, nstruct_ = 0, ncols_ = 0, width_ = 0, art_begin_ = 0, n_art_ = 0;
  int phase_ = 0;
  bool infeasible_ = false;
  std::vector<double> T_, xb_, lo_, hi_, cost_, dj_;
  std::vector<int> basis_, slack_col_;
  std::vector<VarState> state_;
};

}  // namespace

RelaxationSolution lp_minimize(const std::vector<double>& c, const std::vector<SparseRow>& rows,
                               const std::vector<double>& lower, const std::vector<double>& upper,
                               const Deadline& deadline) {
  StopWatch watch;
  const int n = static_cast<int>(c.size());
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
    throw std::invalid_argument("lp_minimize: bound vectors must match c");
  for (int j = 0; j < n; ++j)
    if (!std::isfinite(lower[j]) || !std::isfinite(upper[j]))
      throw std::invalid_argument("lp_minimize: all variable bounds must be finite");

  RelaxationSolution sol;
  auto finish = [&](SolveStatus st, bool conv, std::vector<double> x, std::string diag = {}) {
    sol.status = st;
    sol.converged = conv;
    sol.x = std::move(x);
    sol.diagnostic = std::move(diag);
    if (!sol.x.empty()) {
      double obj = 0.0;
      for (int j = 0; j < n; ++j) obj += c[j] * sol.x[j];
      sol.objective = obj;
    }
    sol.solve_time = watch.elapsed_s();
    return sol;
  };

  if (deadline.expired()) return finish(SolveStatus::NoSolutionTimeout, false, {});

  const Reduced red = presolve(c, rows, lower, upper);
  if (red.infeasible) return finish(SolveStatus::Infeasible, true, {});

  auto postsolve = [&](const std::vector<double>& xr) {
    std::vector<double> x(n);
    for (int j = 0; j < n; ++j)
      if (red.is_fixed[j]) x[j] = red.fixed[j];
    for (std::size_t k = 0; k < red.kept.size(); ++k) x[red.kept[k]] = xr[k];
    return x;
  };

  if (red.kept.empty() && red.rows.empty())
    return finish(SolveStatus::Optimal, true, postsolve({}));

  // Worst-case dense tableau footprint: structurals plus one slack and one
  // artificial per row, plus the right-hand-side column.
  const std::size_t m_red = red.rows.size();
  const std::size_t width_bound = red.kept.size() + 2 * m_red + 1;
  if (m_red * width_bound * sizeof(double) > kTableauByteCap)
    return finish(SolveStatus::NoSolutionTimeout, false, {},
                  "reduced LP exceeds the dense tableau memory budget");

  Tableau tab(red, deadline);
  if (tab.phase1_needed()) {
    const RunOutcome out1 = tab.run_phase1();
    if (out1 == RunOutcome::Deadline || out1 == RunOutcome::IterLimit)
      return finish(SolveStatus::NoSolutionTimeout, false, {},
                    out1 == RunOutcome::IterLimit ? "phase-1 iteration limit" : "");
    if (out1 == RunOutcome::Breakdown)
      return finish(SolveStatus::NoSolutionTimeout, false, {}, "phase-1 pivot breakdown");
    if (tab.infeasible_detected()) return finish(SolveStatus::Infeasible, true, {});
  }
  const RunOutcome out2 = tab.run_phase2();
  switch (out2) {
    case RunOutcome::Optimal:
      return finish(SolveStatus::Optimal, true, postsolve(tab.extract()));
    case RunOutcome::Deadline:
      return finish(SolveStatus::FeasibleSuboptimal, false, postsolve(tab.extract()));
    case RunOutcome::IterLimit:
      return finish(SolveStatus::FeasibleSuboptimal, false, postsolve(tab.extract()),
                    "phase-2 iteration limit");
    case RunOutcome::Breakdown:
      return finish(SolveStatus::NoSolutionTimeout, false, {}, "phase-2 pivot breakdown");
  }
  return finish(SolveStatus::NoSolutionTimeout, false, {}, "unreachable");
}

}  // namespace mbqp
