#include "atnlab/choose.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace atnlab {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
  if (g.order() > 64) throw std::invalid_argument("coloring routines support at most 64 vertices");
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

// Backtracking list coloring over color bitmasks. `color` receives the
// chosen color or -1.
bool color_from_masks(const std::vector<Mask>& adj, const std::vector<Mask>& lists, std::vector<int>& color,
                      int uncolored) {
  if (uncolored == 0) return true;
  const int n = static_cast<int>(adj.size());
  int pick = -1;
  Mask pick_options = 0;
  int pick_count = 65;
  for (int v = 0; v < n; ++v) {
    if (color[static_cast<std::size_t>(v)] >= 0) continue;
    Mask options = lists[static_cast<std::size_t>(v)];
    for (Mask nb = adj[static_cast<std::size_t>(v)]; nb; nb &= nb - 1) {
      int w = std::countr_zero(nb);
      if (color[static_cast<std::size_t>(w)] >= 0) options &= ~(Mask{1} << color[static_cast<std::size_t>(w)]);
    }
    int count = std::popcount(options);
    if (count == 0) return false;
    if (count < pick_count) {
      pick = v;
      pick_options = options;
      pick_count = count;
    }
  }
  for (Mask opt = pick_options; opt; opt &= opt - 1) {
    color[static_cast<std::size_t>(pick)] = std::countr_zero(opt);
    if (color_from_masks(adj, lists, color, uncolored - 1)) return true;
  }
  color[static_cast<std::size_t>(pick)] = -1;
  return false;
}

std::optional<std::vector<int>> color_masks(const std::vector<Mask>& adj, const std::vector<Mask>& lists) {
  std::vector<int> color(adj.size(), -1);
  if (!color_from_masks(adj, lists, color, static_cast<int>(adj.size()))) return std::nullopt;
  return color;
}

// Vertex order for list assignment: breadth-first from a maximum-degree
// vertex, so each vertex after the first tends to touch earlier ones.
std::vector<int> assignment_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> by_degree(static_cast<std::size_t>(g.order()));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int root : by_degree) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      int v = order[head++];
      for (int w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
      }
    }
  }
  return order;
}

int degeneracy(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  int best = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<std::size_t>(v)] && (pick < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
        pick = v;
    best = std::max(best, deg[static_cast<std::size_t>(pick)]);
    gone[static_cast<std::size_t>(pick)] = 1;
    for (int w : g.neighbors(pick)) --deg[static_cast<std::size_t>(w)];
  }
  return best;
}

// Vertex sets of the connected components, each in increasing order.
std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < g.order(); ++root) {
    if (comp[static_cast<std::size_t>(root)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{root};
    comp[static_cast<std::size_t>(root)] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : g.neighbors(members[head])) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = local[static_cast<std::size_t>(e.u)], b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

class ChoosabilitySearch {
 public:
  ChoosabilitySearch(const Graph& g, int k, int universe, const Budget& budget)
      : g_(g),
        k_(k),
        universe_(universe),
        budget_(budget),
        deadline_(budget.wall_clock),
        order_(assignment_order(g)),
        adj_(neighbor_masks(g)),
        lists_(static_cast<std::size_t>(g.order()), 0),
        holders_(static_cast<std::size_t>(universe), 0) {}

  ChoosabilityResult run() {
    ChoosabilityResult result;
    try {
      bool bad = assign(0, 0, 0);
      result.verdict = bad ? Verdict::no : Verdict::yes;
      if (bad) result.witness = to_assignment();
    } catch (const BudgetExceeded&) {
      result.verdict = Verdict::unknown;
    }
    result.assignments = leaves_;
    return result;
  }

 private:
  // Colors whose current holders are an independent set.
  int lonely_colors(int used) const {
    int count = 0;
    for (int c = 0; c < used; ++c) {
      Mask h = holders_[static_cast<std::size_t>(c)];
      bool spans_edge = false;
      for (Mask rest = h; rest && !spans_edge; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        spans_edge = (adj_[static_cast<std::size_t>(v)] & h) != 0;
      }
      count += !spans_edge;
    }
    return count;
  }

  // Assigns a list to order_[pos]; `used` colors 0..used-1 are in play.
  // Returns true once a non-colorable assignment is in place.
  bool assign(std::size_t pos, int used, int /*depth*/) {
    if (++nodes_ > budget_.max_search_nodes) throw BudgetExceeded("choosability search exceeded node budget", {});
    if ((nodes_ & 0xfff) == 0 && deadline_.expired()) {
      throw BudgetExceeded("choosability search exceeded the wall-clock budget", {});
    }
    const std::size_t n = order_.size();
    const std::uint64_t remaining_slots = static_cast<std::uint64_t>(n - pos) * static_cast<std::uint64_t>(k_);
    if (static_cast<std::uint64_t>(lonely_colors(used)) > remaining_slots) return false;
    if (pos == n) {
      if (lonely_colors(used) > 0) return false;
      ++leaves_;
      return !color_masks(adj_, lists_).has_value();
    }
    // Choose j old colors (a subset of 0..used-1) plus k-j fresh ones.
    const int v = order_[pos];
    for (int fresh = 0; fresh <= k_; ++fresh) {
      const int old = k_ - fresh;
      if (old > used || used + fresh > universe_) continue;
      Mask fresh_mask = 0;
      for (int c = used; c < used + fresh; ++c) fresh_mask |= Mask{1} << c;
      if (for_each_subset(used, old, [&](Mask old_mask) {
            Mask list = old_mask | fresh_mask;
            place(v, list);
            bool bad = assign(pos + 1, used + fresh, 0);
            if (!bad) unplace(v, list);
            return bad;
          })) {
        return true;
      }
    }
    return false;
  }

  template <typename Fn>
  static bool for_each_subset(int used, int size, Fn&& fn) {
    if (size == 0) return fn(Mask{0});
    // Gosper's hack over size-element subsets of 0..used-1.
    Mask subset = (Mask{1} << size) - 1;
    const Mask limit = used >= 64 ? ~Mask{0} : (Mask{1} << used);
    while (subset < limit) {
      if (fn(subset)) return true;
      Mask c = subset & (~subset + 1);
      Mask r = subset + c;
      if (r == 0) break;
      subset = (((r ^ subset) >> 2) / c) | r;
    }
    return false;
  }

  void place(int v, Mask list) {
    lists_[static_cast<std::size_t>(v)] = list;
    for (Mask rest = list; rest; rest &= rest - 1) holders_[static_cast<std::size_t>(std::countr_zero(rest))] |= Mask{1} << v;
  }

  void unplace(int v, Mask list) {
    lists_[static_cast<std::size_t>(v)] = 0;
    for (Mask rest = list; rest; rest &= rest - 1) holders_[static_cast<std::size_t>(std::countr_zero(rest))] &= ~(Mask{1} << v);
  }

  ListAssignment to_assignment() const {
    ListAssignment la;
    for (Mask list : lists_) {
      std::vector<int> colors;
      for (Mask rest = list; rest; rest &= rest - 1) colors.push_back(std::countr_zero(rest));
      la.lists.push_back(std::move(colors));
    }
    return la;
  }

  const Graph& g_;
  int k_;
  int universe_;
  const Budget& budget_;
  Deadline deadline_;
  std::vector<int> order_;
  std::vector<Mask> adj_;
  std::vector<Mask> lists_;
  std::vector<Mask> holders_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

std::optional<std::vector<int>> proper_coloring_exists(const Graph& g, const ListAssignment& lists) {
  if (static_cast<int>(lists.lists.size()) != g.order()) {
    throw std::invalid_argument("list assignment must cover every vertex");
  }
  std::vector<Mask> masks;
  for (const auto& list : lists.lists) {
    Mask m = 0;
    for (int c : list) {
      if (c < 0 || c >= 64) throw std::invalid_argument("list colors must lie in 0..63");
      m |= Mask{1} << c;
    }
    masks.push_back(m);
  }
  return color_masks(neighbor_masks(g), masks);
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

ChoosabilityResult is_k_choosable(const Graph& g, int k, const Budget& budget, int universe_cap) {
  if (k < 1) throw std::invalid_argument("is_k_choosable: k must be >= 1");
  if (g.order() == 0) return {Verdict::yes, std::nullopt, 0};
  // Greedy along a degeneracy order always finds a free color.
  if (k > degeneracy(g)) return {Verdict::yes, std::nullopt, 0};

  const std::vector<std::vector<int>> parts = components(g);
  if (parts.size() > 1) {
    ChoosabilityResult total{Verdict::yes, std::nullopt, 0};
    for (const auto& part : parts) {
      const ChoosabilityResult r = is_k_choosable(induced(g, part), k, budget, universe_cap);
      total.assignments += r.assignments;
      if (r.verdict == Verdict::unknown) total.verdict = Verdict::unknown;
      if (r.verdict != Verdict::no) continue;
      ListAssignment la;
      std::vector<int> base(static_cast<std::size_t>(k));
      std::iota(base.begin(), base.end(), 0);
      la.lists.assign(static_cast<std::size_t>(g.order()), base);
      for (std::size_t i = 0; i < part.size(); ++i)
        la.lists[static_cast<std::size_t>(part[i])] = r.witness->lists[i];
      return {Verdict::no, std::move(la), total.assignments};
    }
    return total;
  }
  const long long slots = static_cast<long long>(k) * g.order();
  const int universe = static_cast<int>(std::min<long long>({slots, std::max<long long>(k, slots / 2),
                                                             universe_cap, 64}));
  if (universe < k) throw std::invalid_argument("is_k_choosable: color universe smaller than k");
  return ChoosabilitySearch(g, k, universe, budget).run();
}

std::optional<int> choice_number(const Graph& g, int max_k, const Budget& budget) {
  for (int k = 1; k <= max_k; ++k) {
    auto result = is_k_choosable(g, k, budget);
    if (result.verdict == Verdict::yes) return k;
    if (result.verdict == Verdict::unknown) return std::nullopt;
  }
  return std::nullopt;
}

int chromatic_number(const Graph& g) {
  if (g.order() > 16) throw std::invalid_argument("chromatic_number: at most 16 vertices, got " + std::to_string(g.order()));
  if (g.order() == 0) return 0;
  auto adj = neighbor_masks(g);
  // Greedy clique for the starting bound.
  int clique = 1;
  for (int start = 0; start < g.order(); ++start) {
    Mask members = Mask{1} << start;
    Mask candidates = adj[static_cast<std::size_t>(start)];
    while (candidates) {
      int v = std::countr_zero(candidates);
      members |= Mask{1} << v;
      candidates &= adj[static_cast<std::size_t>(v)];
    }
    clique = std::max(clique, std::popcount(members));
  }
  for (int c = clique; c <= g.order(); ++c) {
    std::vector<Mask> lists(static_cast<std::size_t>(g.order()), (Mask{1} << c) - 1);
    if (color_masks(adj, lists)) return c;
  }
  return g.order();
}

std::string witness_json(const ListAssignment& lists, bool colorable) {
  std::ostringstream out;
  out << "{\"lists\":[";
  for (std::size_t v = 0; v < lists.lists.size(); ++v) {
    out << (v ? "," : "") << '[';
    for (std::size_t i = 0; i < lists.lists[v].size(); ++i) out << (i ? "," : "") << lists.lists[v][i];
    out << ']';
  }
  out << "],\"colorable\":" << (colorable ? "true" : "false") << '}';
  return out.str();
}

}  // namespace atnlab
