#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace atnlab {

/// Work limits for the exact enumeration kernels.
///
/// Term, subset and node counts are machine-independent and make budget
/// outcomes reproducible; the wall-clock ceiling is an operator safety net.
struct Budget {
  std::uint64_t max_term_mults = 10'000'000;
  std::uint64_t max_subsets = std::uint64_t{1} << 26;
  std::uint64_t max_search_nodes = 100'000'000;
  std::chrono::milliseconds wall_clock{60'000};

  /// Defaults, with `wall_clock` taken from ATNLAB_BUDGET_MS when set.
  static Budget from_env();
  static Budget unlimited();
};

/// Work performed by one computation. All counters are deterministic.
struct WorkStats {
  std::uint64_t term_mults = 0;
  std::uint64_t peak_terms = 0;
  std::uint64_t subsets = 0;
  std::uint64_t search_nodes = 0;
  std::uint64_t parity_evaluations = 0;

  WorkStats& operator+=(const WorkStats& other);
};

/// Raised when a computation would exceed its Budget. Never accompanied by
/// a partial result; `proven_lower_bound` carries what was established.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what, WorkStats progress,
                 std::optional<int> proven_lower_bound = std::nullopt)
      : std::runtime_error(std::move(what)),
        progress_(progress),
        proven_lower_bound_(proven_lower_bound) {}

  const WorkStats& progress() const noexcept { return progress_; }
  std::optional<int> proven_lower_bound() const noexcept { return proven_lower_bound_; }

 private:
  WorkStats progress_;
  std::optional<int> proven_lower_bound_;
};

/// Wall-clock deadline polled from inner loops.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  explicit Deadline(std::chrono::milliseconds limit) : end_(clock::now() + limit) {}

  bool expired() const { return clock::now() >= end_; }

 private:
  clock::time_point end_;
};

}  // namespace atnlab
