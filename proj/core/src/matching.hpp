#pragma once

#include <optional>
#include <vector>

namespace atnlab::detail {

// Kuhn's augmenting-path matching. `adjacency[l]` lists right-side indices
// in 0..right_count-1, tried in the given order. Returns the right partner
// of every left vertex when a left-perfect matching exists.
inline std::optional<std::vector<int>> perfect_bipartite_matching(
    const std::vector<std::vector<int>>& adjacency, int right_count) {
  const int left_count = static_cast<int>(adjacency.size());
  std::vector<int> right_partner(static_cast<std::size_t>(right_count), -1);
  std::vector<int> seen(static_cast<std::size_t>(right_count), -1);

  auto augment = [&](auto&& self, int left, int stamp) -> bool {
    for (int right : adjacency[static_cast<std::size_t>(left)]) {
      auto r = static_cast<std::size_t>(right);
      if (seen[r] == stamp) continue;
      seen[r] = stamp;
      if (right_partner[r] < 0 || self(self, right_partner[r], stamp)) {
        right_partner[r] = left;
        return true;
      }
    }
    return false;
  };

  for (int left = 0; left < left_count; ++left) {
    if (!augment(augment, left, left)) return std::nullopt;
  }
  std::vector<int> left_partner(static_cast<std::size_t>(left_count), -1);
  for (int right = 0; right < right_count; ++right) {
    if (right_partner[static_cast<std::size_t>(right)] >= 0) {
      left_partner[static_cast<std::size_t>(right_partner[static_cast<std::size_t>(right)])] = right;
    }
  }
  return left_partner;
}

}  // namespace atnlab::detail
