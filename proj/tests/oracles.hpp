#pragma once

// Slow reference implementations used only by the tests. None of them shares
// code with the library kernels they check.

#include "atnlab/factor.hpp"
#include "atnlab/graph.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using atnlab::Graph;
using atnlab::Orientation;
using Dense = std::map<std::vector<int>, long long>;

// Full product of (x_u - x_v) over edges u < v, one factor at a time.
inline Dense expand(const Graph& g) {
  Dense p{{std::vector<int>(static_cast<std::size_t>(g.order()), 0), 1}};
  for (const auto& e : g.edges()) {
    Dense next;
    for (const auto& [exps, c] : p) {
      auto a = exps;
      ++a[static_cast<std::size_t>(e.u)];
      next[a] += c;
      auto b = exps;
      ++b[static_cast<std::size_t>(e.v)];
      next[b] -= c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    p = std::move(next);
  }
  return p;
}

inline long long coefficient(const Graph& g, const std::vector<int>& target) {
  const Dense p = expand(g);
  auto it = p.find(target);
  return it == p.end() ? 0 : it->second;
}

// 1 + least max exponent over the nonzero terms.
inline int atn(const Graph& g) {
  int best = INT_MAX;
  for (const auto& [exps, c] : expand(g)) best = std::min(best, *std::max_element(exps.begin(), exps.end()));
  return best + 1;
}

struct Parity {
  long long even = 0;
  long long odd = 0;
};

// Every arc subset, balance recomputed from scratch.
inline Parity eulerian_parity(const Orientation& o) {
  const Graph& g = o.base();
  const int m = g.size();
  Parity out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<int> bal(static_cast<std::size_t>(g.order()), 0);
    for (int i = 0; i < m; ++i) {
      if (!((mask >> i) & 1)) continue;
      ++bal[static_cast<std::size_t>(o.tail(i))];
      --bal[static_cast<std::size_t>(o.head(i))];
    }
    if (std::all_of(bal.begin(), bal.end(), [](int b) { return b == 0; })) {
      (__builtin_popcountll(mask) % 2 == 0 ? out.even : out.odd) += 1;
    }
  }
  return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      if (!b.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Tries every choice from every list.
inline bool list_colorable(const Graph& g, const std::vector<std::vector<int>>& lists) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c : lists[static_cast<std::size_t>(v)]) {
      bool clash = false;
      for (int w : g.neighbors(v))
        if (w < v && color[static_cast<std::size_t>(w)] == c) clash = true;
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (self(self, v + 1)) return true;
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  return rec(rec, 0);
}

inline bool proper(const Graph& g, const std::vector<int>& coloring) {
  for (const auto& e : g.edges())
    if (coloring[static_cast<std::size_t>(e.u)] == coloring[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

inline Orientation random_orientation(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1);
  return Orientation(g, std::move(bits));
}

// Graph with n in [lo_n, hi_n] and at most max_m edges.
inline Graph random_small_graph(std::mt19937_64& rng, int lo_n, int hi_n, int max_m) {
  const int n = std::uniform_int_distribution<int>(lo_n, hi_n)(rng);
  const int cap = std::min(max_m, n * (n - 1) / 2);
  const int m = std::uniform_int_distribution<int>(0, cap)(rng);
  return atnlab::random_graph(n, m, rng());
}

}  // namespace oracle
