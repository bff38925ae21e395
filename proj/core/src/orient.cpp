#include "atnlab/orient.hpp"

#include "packed.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace atnlab {

namespace {

struct Arc {
  int tail;
  int head;
};

// Balanced-subset counts of one strongly connected piece, vertices 0..n-1.
ParityDiff enumerate_gray(const std::vector<Arc>& arcs, int n, const Deadline& deadline, WorkStats& work) {
  const int m = static_cast<int>(arcs.size());
  std::vector<int> balance(static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> included(static_cast<std::size_t>(m), 0);
  int unbalanced = 0;
  ParityDiff counts{1, 0};

  auto shift = [&](int v, int delta) {
    int& b = balance[static_cast<std::size_t>(v)];
    unbalanced -= (b != 0);
    b += delta;
    unbalanced += (b != 0);
  };

  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    auto& in = included[static_cast<std::size_t>(bit)];
    in ^= 1;
    const int delta = in ? 1 : -1;
    const Arc& a = arcs[static_cast<std::size_t>(bit)];
    shift(a.tail, delta);
    shift(a.head, -delta);
    // The i-th Gray codeword has popcount parity i mod 2.
    if (unbalanced == 0) {
      if (i & 1) {
        ++counts.odd_count;
      } else {
        ++counts.even_count;
      }
    }
    if ((i & 0xfffff) == 0 && deadline.expired()) {
      throw BudgetExceeded("Eulerian sub-digraph enumeration exceeded the wall-clock budget", work);
    }
  }
  work.subsets += total;
  return counts;
}

// Arc indices grouped by strongly connected component, after peeling arcs
// that touch a source or a sink. Arcs between components lie on no cycle.
std::vector<std::vector<int>> cyclic_components(const std::vector<Arc>& arcs, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<char> alive(arcs.size(), 1);
  std::vector<int> out(un, 0), in(un, 0);
  std::vector<std::vector<int>> at(un);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    ++out[static_cast<std::size_t>(arcs[a].tail)];
    ++in[static_cast<std::size_t>(arcs[a].head)];
    at[static_cast<std::size_t>(arcs[a].tail)].push_back(static_cast<int>(a));
    at[static_cast<std::size_t>(arcs[a].head)].push_back(static_cast<int>(a));
  }
  std::vector<int> queue;
  auto dead_end = [&](int v) {
    auto uv = static_cast<std::size_t>(v);
    return (out[uv] == 0) != (in[uv] == 0);
  };
  for (int v = 0; v < n; ++v)
    if (dead_end(v)) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int a : at[static_cast<std::size_t>(v)]) {
      if (!alive[static_cast<std::size_t>(a)]) continue;
      alive[static_cast<std::size_t>(a)] = 0;
      const Arc& arc = arcs[static_cast<std::size_t>(a)];
      --out[static_cast<std::size_t>(arc.tail)];
      --in[static_cast<std::size_t>(arc.head)];
      for (int w : {arc.tail, arc.head}) {
        if (w != v && dead_end(w)) queue.push_back(w);
      }
    }
  }

  // Kosaraju over the surviving arcs.
  std::vector<std::vector<int>> fwd(un), bwd(un);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!alive[a]) continue;
    fwd[static_cast<std::size_t>(arcs[a].tail)].push_back(arcs[a].head);
    bwd[static_cast<std::size_t>(arcs[a].head)].push_back(arcs[a].tail);
  }
  std::vector<int> finish;
  std::vector<char> seen(un, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& adj = fwd[static_cast<std::size_t>(v)];
      if (next < adj.size()) {
        int w = adj[next++];
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back({w, 0});
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<int> comp(un, -1);
  int count = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    std::vector<int> stack{*it};
    comp[static_cast<std::size_t>(*it)] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : bwd[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<std::vector<int>> groups(static_cast<std::size_t>(count));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (!alive[a]) continue;
    int ct = comp[static_cast<std::size_t>(arcs[a].tail)];
    if (ct == comp[static_cast<std::size_t>(arcs[a].head)]) groups[static_cast<std::size_t>(ct)].push_back(static_cast<int>(a));
  }
  std::erase_if(groups, [](const std::vector<int>& g) { return g.empty(); });
  return groups;
}

}  // namespace

ParityDiff eulerian_parity_diff(const Orientation& o, const Budget& budget, WorkStats* work) {
  WorkStats local;
  WorkStats& stats = work ? *work : local;
  const Graph& g = o.base();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) arcs.push_back({o.tail(e), o.head(e)});

  auto groups = cyclic_components(arcs, g.order());
  std::uint64_t planned = 0;
  for (const auto& group : groups) {
    if (group.size() > 62) {
      throw BudgetExceeded("Eulerian sub-digraph enumeration: component with " + std::to_string(group.size()) +
                               " arcs is beyond exhaustive enumeration",
                           stats);
    }
    planned += std::uint64_t{1} << group.size();
  }
  if (planned > budget.max_subsets) {
    throw BudgetExceeded("Eulerian sub-digraph enumeration needs " + std::to_string(planned) +
                             " subsets, budget is " + std::to_string(budget.max_subsets),
                         stats);
  }
  ++stats.parity_evaluations;

  const Deadline deadline(budget.wall_clock);
  ParityDiff total{1, 0};
  std::vector<int> local_id(static_cast<std::size_t>(g.order()), -1);
  for (const auto& group : groups) {
    std::vector<Arc> piece;
    int n = 0;
    for (int a : group) {
      for (int v : {arcs[static_cast<std::size_t>(a)].tail, arcs[static_cast<std::size_t>(a)].head}) {
        if (local_id[static_cast<std::size_t>(v)] < 0) local_id[static_cast<std::size_t>(v)] = n++;
      }
      piece.push_back({local_id[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].tail)],
                       local_id[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].head)]});
    }
    ParityDiff part = enumerate_gray(piece, n, deadline, stats);
    // Subsets of distinct components combine freely; parities add.
    total = {total.even_count * part.even_count + total.odd_count * part.odd_count,
             total.even_count * part.odd_count + total.odd_count * part.even_count};
    for (int a : group) {
      local_id[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].tail)] = -1;
      local_id[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].head)] = -1;
    }
  }
  return total;
}

std::string to_json(const ParityDiff& d) {
  return "{\"even\":" + std::to_string(d.even_count) + ",\"odd\":" + std::to_string(d.odd_count) +
         ",\"diff\":" + std::to_string(d.diff()) + "}";
}

int orientation_sign(const Orientation& o) {
  int reversed = 0;
  for (auto bit : o.reversed_bits()) reversed += bit;
  return reversed % 2 == 0 ? 1 : -1;
}

Coefficient coefficient_via_orientations(const Graph& g, const ExponentVector& target, const Budget& budget,
                                         WorkStats* work) {
  if (target.size() != g.order()) {
    throw std::invalid_argument("coefficient_via_orientations: target has " + std::to_string(target.size()) +
                                " entries, graph has " + std::to_string(g.order()) + " vertices");
  }
  if (target.total() != g.size()) return 0;
  WorkStats local;
  WorkStats& stats = work ? *work : local;
  const int m = g.size();
  const auto n = static_cast<std::size_t>(g.order());

  // remaining[i][v]: edges at v among positions i..m-1.
  std::vector<std::vector<int>> remaining(static_cast<std::size_t>(m) + 1, std::vector<int>(n, 0));
  for (int i = m - 1; i >= 0; --i) {
    remaining[static_cast<std::size_t>(i)] = remaining[static_cast<std::size_t>(i) + 1];
    ++remaining[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.edge(i).u)];
    ++remaining[static_cast<std::size_t>(i)][static_cast<std::size_t>(g.edge(i).v)];
  }
  std::vector<int> out(n, 0);
  const Deadline deadline(budget.wall_clock);
  Coefficient sum = 0;

  auto feasible = [&](int v, std::size_t next) {
    auto uv = static_cast<std::size_t>(v);
    return out[uv] <= target[v] && out[uv] + remaining[next][uv] >= target[v];
  };
  auto dfs = [&](auto&& self, int i, int sign) -> void {
    if (++stats.search_nodes > budget.max_search_nodes) {
      throw BudgetExceeded("orientation enumeration exceeded " + std::to_string(budget.max_search_nodes) +
                               " search nodes",
                           stats);
    }
    if ((stats.search_nodes & 0xffff) == 0 && deadline.expired()) {
      throw BudgetExceeded("orientation enumeration exceeded the wall-clock budget", stats);
    }
    if (i == m) {
      sum += sign;
      return;
    }
    const Edge& e = g.edge(i);
    const auto next = static_cast<std::size_t>(i) + 1;
    for (int reversed = 0; reversed < 2; ++reversed) {
      const int tail = reversed ? e.v : e.u;
      ++out[static_cast<std::size_t>(tail)];
      if (feasible(e.u, next) && feasible(e.v, next)) self(self, i + 1, reversed ? -sign : sign);
      --out[static_cast<std::size_t>(tail)];
    }
  };
  dfs(dfs, 0, 1);
  return sum;
}

namespace {

// Depth-first orientation search at one outdegree bound.
template <int Words>
class BoundedSearch {
 public:
  using Key = detail::PackedCounts<Words>;

  BoundedSearch(const Graph& g, const Budget& budget, WorkStats& work, const Deadline& deadline)
      : g_(g), budget_(budget), work_(work), deadline_(deadline), order_(expansion_edge_order(g)) {
    const auto m = order_.size();
    remaining_.assign(m + 1, std::vector<int>(static_cast<std::size_t>(g.order()), 0));
    for (std::size_t i = m; i-- > 0;) {
      remaining_[i] = remaining_[i + 1];
      const Edge& e = g.edge(order_[i]);
      ++remaining_[i][static_cast<std::size_t>(e.u)];
      ++remaining_[i][static_cast<std::size_t>(e.v)];
    }
  }

  std::optional<OrientationAtn> run(int bound) {
    bound_ = bound;
    visited_.clear();
    reversed_.assign(static_cast<std::size_t>(g_.size()), 0);
    found_.reset();
    dfs(0, Key{});
    return std::move(found_);
  }

 private:
  bool viable(const Key& out, std::size_t depth) const {
    long long slack = 0;
    for (int v = 0; v < g_.order(); ++v) {
      int have = out.get(v);
      if (have > bound_) return false;
      slack += std::min(bound_, have + remaining_[depth][static_cast<std::size_t>(v)]);
    }
    return slack >= g_.size();
  }

  bool dfs(std::size_t depth, const Key& out) {
    if (++work_.search_nodes > budget_.max_search_nodes) {
      throw BudgetExceeded("orientation search exceeded " + std::to_string(budget_.max_search_nodes) +
                               " search nodes",
                           work_);
    }
    if ((work_.search_nodes & 0xffff) == 0 && deadline_.expired()) {
      throw BudgetExceeded("orientation search exceeded the wall-clock budget", work_);
    }
    if (!visited_.insert({static_cast<int>(depth), out}).second) return false;
    if (depth == order_.size()) {
      Orientation candidate(g_, reversed_);
      ParityDiff parity = eulerian_parity_diff(candidate, budget_, &work_);
      if (parity.diff() == 0) return false;
      found_ = OrientationAtn{bound_ + 1, std::move(candidate), parity};
      return true;
    }
    const int e = order_[depth];
    const Edge& edge = g_.edge(e);
    for (std::uint8_t rev = 0; rev < 2; ++rev) {
      Key child = out;
      child.bump(rev ? edge.v : edge.u);
      if (!viable(child, depth + 1)) continue;
      reversed_[static_cast<std::size_t>(e)] = rev;
      if (dfs(depth + 1, child)) return true;
    }
    reversed_[static_cast<std::size_t>(e)] = 0;
    return false;
  }

  const Graph& g_;
  const Budget& budget_;
  WorkStats& work_;
  const Deadline& deadline_;
  std::vector<int> order_;
  std::vector<std::vector<int>> remaining_;
  int bound_ = 0;
  absl::flat_hash_set<std::pair<int, Key>> visited_;
  std::vector<std::uint8_t> reversed_;
  std::optional<OrientationAtn> found_;
};

}  // namespace

std::optional<OrientationAtn> atn_via_orientations_bounded(const Graph& g, int max_atn, const Budget& budget,
                                                           WorkStats* work) {
  if (g.size() == 0) {
    if (max_atn < 1) return std::nullopt;
    return OrientationAtn{1, Orientation::forward(g), ParityDiff{1, 0}};
  }
  if (g.order() > detail::kMaxPackedVertices) {
    throw std::invalid_argument("orientation search supports at most " +
                                std::to_string(detail::kMaxPackedVertices) + " vertices");
  }
  WorkStats local;
  WorkStats& stats = work ? *work : local;
  const Deadline deadline(budget.wall_clock);
  const int top = std::min(max_atn - 1, g.max_degree());
  return detail::dispatch_packed(g.order(), [&]<int Words>() -> std::optional<OrientationAtn> {
    BoundedSearch<Words> search(g, budget, stats, deadline);
    for (int k = ceil_edge_density(g); k <= top; ++k) {
      try {
        if (auto hit = search.run(k)) return hit;
      } catch (const BudgetExceeded& ex) {
        throw BudgetExceeded(std::string(ex.what()) + " at outdegree bound " + std::to_string(k), stats, k + 1);
      }
    }
    return std::nullopt;
  });
}

OrientationAtn atn_via_orientations(const Graph& g, const Budget& budget, WorkStats* work) {
  // An acyclic orientation has parity difference 1, so the search cannot
  // pass bound = max degree.
  auto result = atn_via_orientations_bounded(g, g.max_degree() + 1, budget, work);
  if (!result) throw std::logic_error("atn_via_orientations: no certifying orientation found");
  return *std::move(result);
}

CorrespondenceReport verify_correspondence(const Orientation& o, const Budget& budget) {
  CorrespondenceReport report;
  report.coefficient = coefficient(o.base(), ExponentVector(o.outdegrees()), budget);
  report.diff = eulerian_parity_diff(o, budget).diff();
  report.sign = orientation_sign(o);
  report.abs_match = abs(report.coefficient) == Coefficient(report.diff < 0 ? -report.diff : report.diff);
  report.signed_match = report.coefficient == Coefficient(report.sign * report.diff);
  return report;
}

}  // namespace atnlab
