#include "atnlab/graph.hpp"

#include "matching.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace atnlab {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> vertex_labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(vertex_labels)) {
  require(n >= 0, "graph order must be non-negative");
  require(labels_.empty() || static_cast<int>(labels_.size()) == n,
          "vertex label count must equal the vertex count");
  for (Edge& e : edges_) {
    require(e.u != e.v, "self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    require(e.u >= 0 && e.v < n, "edge " + edge_text(e) + " has an endpoint outside 0.." +
                                     std::to_string(n - 1));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  require(dup == edges_.end(), dup == edges_.end() ? "" : "duplicate edge " + edge_text(*dup));

  adjacency_.assign(static_cast<std::size_t>(n), {});
  incidence_.assign(static_cast<std::size_t>(n), {});
  for (int j = 0; j < size(); ++j) {
    const Edge& e = edges_[static_cast<std::size_t>(j)];
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
    incidence_[static_cast<std::size_t>(e.u)].push_back(j);
    incidence_[static_cast<std::size_t>(e.v)].push_back(j);
  }
  // Edges at u arrive sorted by v, but edges at v arrive sorted by u only
  // among themselves; merge both by re-sorting on the other endpoint.
  for (int v = 0; v < n; ++v) {
    auto& adj = adjacency_[static_cast<std::size_t>(v)];
    auto& inc = incidence_[static_cast<std::size_t>(v)];
    auto other = [&](int j) {
      const Edge& e = edges_[static_cast<std::size_t>(j)];
      return e.u == v ? e.v : e.u;
    };
    std::sort(inc.begin(), inc.end(), [&](int a, int b) { return other(a) < other(b); });
    std::sort(adj.begin(), adj.end());
  }
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

int Graph::min_degree() const noexcept {
  if (n_ == 0) return 0;
  int best = n_;
  for (const auto& adj : adjacency_) best = std::min(best, static_cast<int>(adj.size()));
  return best;
}

bool Graph::is_regular() const noexcept { return max_degree() == min_degree(); }

bool Graph::adjacent(int a, int b) const { return edge_index(a, b).has_value(); }

std::optional<int> Graph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::complete_multipartite: return "complete_multipartite";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::circulant_bipartite: return "circulant_bipartite";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::complete, Family::complete_bipartite, Family::complete_multipartite,
                   Family::cycle, Family::path, Family::circulant_bipartite}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Graph complete_graph(int n) {
  require(n >= 1, "complete: order must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
  const int parts[] = {m, n};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const int> part_sizes) {
  require(!part_sizes.empty(), "complete_multipartite: at least one part is required");
  std::vector<int> offset;
  int total = 0;
  for (int p : part_sizes) {
    require(p >= 1, "complete_multipartite: part sizes must be >= 1");
    offset.push_back(total);
    total += p;
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < part_sizes.size(); ++a)
    for (std::size_t b = a + 1; b < part_sizes.size(); ++b)
      for (int i = 0; i < part_sizes[a]; ++i)
        for (int j = 0; j < part_sizes[b]; ++j) edges.push_back({offset[a] + i, offset[b] + j});
  return Graph(total, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle: length must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path: order must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph circulant_bipartite(int part_size, int degree) {
  require(part_size >= 1, "circulant_bipartite: part size must be >= 1");
  require(degree >= 1 && degree <= part_size,
          "circulant_bipartite: degree must satisfy 1 <= d <= part size");
  std::vector<Edge> edges;
  for (int i = 0; i < part_size; ++i)
    for (int t = 0; t < degree; ++t) edges.push_back({i, part_size + (i + t) % part_size});
  return Graph(2 * part_size, std::move(edges));
}

Graph build_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t want) {
    require(p.size() == want, std::string(family_name(spec.family)) + " expects " +
                                  std::to_string(want) + " parameter(s), got " +
                                  std::to_string(p.size()));
  };
  switch (spec.family) {
    case Family::complete: arity(1); return complete_graph(p[0]);
    case Family::complete_bipartite:
      arity(2);
      require(p[0] >= 1 && p[1] >= 1, "complete_bipartite: part sizes must be >= 1");
      return complete_bipartite(p[0], p[1]);
    case Family::complete_multipartite: return complete_multipartite(p);
    case Family::cycle: arity(1); return cycle_graph(p[0]);
    case Family::path: arity(1); return path_graph(p[0]);
    case Family::circulant_bipartite: arity(2); return circulant_bipartite(p[0], p[1]);
  }
  throw std::invalid_argument("unknown family");
}

Graph line_graph(const Graph& g) {
  require(g.size() >= 1, "line_graph: the base graph needs at least one edge");
  std::vector<Edge> edges;
  for (int v = 0; v < g.order(); ++v) {
    auto inc = g.incident_edges(v);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) edges.push_back({inc[a], inc[b]});
  }
  std::vector<std::string> labels;
  for (const Edge& e : g.edges()) labels.push_back("edge " + edge_text(e));
  return Graph(g.size(), std::move(edges), std::move(labels));
}

Graph subdivision_graph(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges;
  for (int j = 0; j < g.size(); ++j) {
    edges.push_back({g.edge(j).u, n + j});
    edges.push_back({g.edge(j).v, n + j});
  }
  return Graph(n + g.size(), std::move(edges));
}

Graph total_graph(const Graph& g) {
  const int n = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (g.size() > 0) {
    const Graph lg = line_graph(g);
    for (const Edge& e : lg.edges()) edges.push_back({n + e.u, n + e.v});
  }
  for (int j = 0; j < g.size(); ++j) {
    edges.push_back({g.edge(j).u, n + j});
    edges.push_back({g.edge(j).v, n + j});
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("vertex " + std::to_string(v));
  for (const Edge& e : g.edges()) labels.push_back("edge " + edge_text(e));
  return Graph(n + g.size(), std::move(edges), std::move(labels));
}

Rational atn_lower_bound(const Graph& g) {
  require(g.order() >= 1, "atn_lower_bound: graph must have at least one vertex");
  return Rational(g.size(), g.order());
}

int ceil_edge_density(const Graph& g) {
  if (g.order() == 0) return 0;
  return (g.size() + g.order() - 1) / g.order();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (int start = 0; start < g.order(); ++start) {
    if (side[static_cast<std::size_t>(start)] >= 0) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(v)) {
        auto& s = side[static_cast<std::size_t>(w)];
        if (s < 0) {
          s = 1 - side[static_cast<std::size_t>(v)];
          frontier.push(w);
        } else if (s == side[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph random_graph(int n, int m, std::uint64_t seed) {
  require(n >= 0, "random_graph: order must be non-negative");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  require(m >= 0 && m <= static_cast<int>(all.size()),
          "random_graph: edge count exceeds n(n-1)/2");
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(m));
  return Graph(n, std::move(all));
}

Graph random_regular_bipartite(int part_size, int degree, std::uint64_t seed) {
  require(part_size >= 1 && degree >= 1 && degree <= part_size,
          "random_regular_bipartite: need 1 <= d <= part size");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<std::size_t>(part_size);
  // available[i][j]: left i may still be joined to right j. Removing perfect
  // matchings from K_{n,n} keeps it regular, so the next matching exists.
  std::vector<std::vector<char>> available(n, std::vector<char>(n, 1));
  std::vector<Edge> edges;
  for (int t = 0; t < degree; ++t) {
    std::vector<std::vector<int>> adjacency(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (available[i][j]) adjacency[i].push_back(static_cast<int>(j));
      std::shuffle(adjacency[i].begin(), adjacency[i].end(), rng);
    }
    auto matching = detail::perfect_bipartite_matching(adjacency, part_size);
    if (!matching) throw std::logic_error("random_regular_bipartite: matching extraction failed");
    for (std::size_t i = 0; i < n; ++i) {
      int j = (*matching)[i];
      available[i][static_cast<std::size_t>(j)] = 0;
      edges.push_back({static_cast<int>(i), part_size + j});
    }
  }
  return Graph(2 * part_size, std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace {

// Next non-blank, non-comment line; returns false at end of input.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw std::invalid_argument("edge list: missing header line \"<n> <m>\"");
  }
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("edge list line " + std::to_string(line_no) + ": " + why);
  };
  long long n = -1, m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) fail("header must be \"<n> <m>\"");
    if (n < 0 || m < 0) fail("n and m must be non-negative");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no)) {
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) fail("edge must be \"<u> <v>\"");
    if (!(0 <= u && u < v && v < n)) fail("edge endpoints must satisfy 0 <= u < v < n");
    Edge e{static_cast<int>(u), static_cast<int>(v)};
    if (!edges.empty() && !(edges.back() < e)) fail("edges must be strictly increasing");
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  Graph g = read_edge_list(in);
  std::string line;
  int line_no = 0;
  if (next_content_line(in, line, line_no)) {
    throw std::invalid_argument("edge list: unexpected content after the last edge: \"" + line + "\"");
  }
  return g;
}

std::string describe(const Graph& g) {
  return "n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size());
}

}  // namespace atnlab
