#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atnlab {

/// Undirected edge with `u < v` once stored in a Graph.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// The edge list is kept in strictly increasing lexicographic order. Every
/// other module indexes edges by their position in this canonical order.
class Graph {
 public:
  Graph() = default;

  /// Normalizes each edge to u < v and sorts. Throws std::invalid_argument
  /// on self-loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> vertex_labels = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  /// Neighbors of `v` in increasing order.
  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  /// Canonical indices of the edges at `v`, ordered by the other endpoint.
  std::span<const int> incident_edges(int v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const noexcept;
  int min_degree() const noexcept;
  bool is_regular() const noexcept;
  bool adjacent(int a, int b) const;
  std::optional<int> edge_index(int a, int b) const;

  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incidence_;
  std::vector<std::string> labels_;
};

enum class Family { complete, complete_bipartite, complete_multipartite, cycle, path, circulant_bipartite };

/// A parameterized graph family.
///
///   complete [n], complete_bipartite [m, n], complete_multipartite [p0, p1, ...],
///   cycle [n] (n >= 3), path [n], circulant_bipartite [n, d] (1 <= d <= n).
struct FamilySpec {
  Family family = Family::complete;
  std::vector<int> params;
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Multipartite parts occupy consecutive index blocks. circulant_bipartite
/// joins left vertex i to right vertex n + (i + t) mod n for t in 0..d-1.
Graph build_family(const FamilySpec& spec);

Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph complete_multipartite(std::span<const int> part_sizes);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph circulant_bipartite(int part_size, int degree);

/// One vertex per edge of `g` (in canonical edge order); adjacent iff the
/// edges share an endpoint. Requires at least one edge.
Graph line_graph(const Graph& g);

/// Original vertices keep 0..n-1; the vertex subdividing edge j is n + j.
Graph subdivision_graph(const Graph& g);

/// G, L(G) shifted by n, and the vertex-edge incidences of S(G).
Graph total_graph(const Graph& g);

using Rational = boost::rational<std::int64_t>;

/// Half the average degree, |E| / n, exactly.
Rational atn_lower_bound(const Graph& g);

/// Smallest integer >= |E| / n.
int ceil_edge_density(const Graph& g);

/// 2-coloring (side 0 / 1 per vertex) if `g` is bipartite. Components are
/// colored from their smallest vertex, which gets side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Uniformly random simple graph with exactly `m` edges.
Graph random_graph(int n, int m, std::uint64_t seed);

/// Random d-regular bipartite graph with parts {0..n-1}, {n..2n-1}, built as
/// a union of d edge-disjoint random perfect matchings.
Graph random_regular_bipartite(int part_size, int degree, std::uint64_t seed);

// Edge-list text format: "<n> <m>" followed by m lines "<u> <v>" with
// 0 <= u < v < n in canonical order. Blank lines and '#' comments are ignored.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Reads the header and exactly m edge lines, leaving the stream after the
/// last edge. Throws std::invalid_argument naming the offending line.
Graph read_edge_list(std::istream& in);
/// Whole-document parse; trailing content is an error.
Graph parse_edge_list(std::string_view text);

/// Short human-readable description, e.g. "n=6 m=12".
std::string describe(const Graph& g);

}  // namespace atnlab
