#include "atnlab/budget.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace atnlab {

Budget Budget::from_env() {
  Budget budget;
  if (const char* raw = std::getenv("ATNLAB_BUDGET_MS"); raw != nullptr) {
    long long ms = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, ms);
    if (ec == std::errc{} && ptr == end && ms > 0) {
      budget.wall_clock = std::chrono::milliseconds{ms};
    }
  }
  return budget;
}

Budget Budget::unlimited() {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  Budget budget;
  budget.max_term_mults = kMax;
  budget.max_subsets = kMax;
  budget.max_search_nodes = kMax;
  budget.wall_clock = std::chrono::hours{24 * 365};
  return budget;
}

WorkStats& WorkStats::operator+=(const WorkStats& other) {
  term_mults += other.term_mults;
  peak_terms = std::max(peak_terms, other.peak_terms);
  subsets += other.subsets;
  search_nodes += other.search_nodes;
  parity_evaluations += other.parity_evaluations;
  return *this;
}

}  // namespace atnlab
