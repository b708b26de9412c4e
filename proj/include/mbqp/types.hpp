/*
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mbqp {

inline constexpr double kDefaultFeasTol = 1e-6;
inline constexpr double kDefaultIntTol = 1e-6;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { LessEqual, Equal };

enum class SolveStatus { Optimal, FeasibleSuboptimal, Infeasible, NoSolutionTimeout };

const char* to_string(SolveStatus s);

/// Entry of the quadratic coefficient matrix, stored upper-triangular (row <= col).
struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// One linear constraint in sparse form.
struct SparseRow {
  std::vector<int> idx;
  std::vector<double> val;
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

struct Solution {
  std::vector<double> x;
  double objective = 0.0;
  bool feasible = false;
  double wall_time = 0.0;  // seconds from solve start
};

struct ViolationReport {
  double max_row_violation = 0.0;
  double max_integrality_violation = 0.0;
  double max_bound_violation = 0.0;
  bool feasible = false;
};

/// Rounds to the nearest integer, halves up.
inline double round_half_up(double v) { return std::floor(v + 0.5); }

/// Monotonic-clock deadline. Default-constructed deadlines never expire.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;

  static Deadline after(double seconds) {
    Deadline d;
    d.limited_ = true;
    d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(std::max(0.0, seconds)));
    return d;
  }

  static Deadline at(Clock::time_point tp) {
    Deadline d;
    d.limited_ = true;
    d.end_ = tp;
    return d;
  }

  bool unlimited() const { return !limited_; }

  bool expired() const { return limited_ && Clock::now() >= end_; }

  double remaining_s() const {
    if (!limited_) return kInf;
    return std::chrono::duration<double>(end_ - Clock::now()).count();
  }

  Clock::time_point end() const { return end_; }

  /// The earlier of two deadlines.
  static Deadline earliest(const Deadline& a, const Deadline& b) {
    if (a.unlimited()) return b;
    if (b.unlimited()) return a;
    return a.end_ < b.end_ ? a : b;
  }

 private:
  bool limited_ = false;
  Clock::time_point end_{};
};

class StopWatch {
 public:
  StopWatch() : start_(std::chrono::steady_clock::now()) {}
  explicit StopWatch(std::chrono::steady_clock::time_point origin) : start_(origin) {}
  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  std::chrono::steady_clock::time_point origin() const { return start_; }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mbqp
