#pragma once

#include "atnlab/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace atnlab {

/// Partition of a regular graph's edges into perfect matchings. Factors hold
/// canonical edge indices into `base`.
struct Factorization {
  Graph base;
  std::vector<std::vector<int>> factors;
};

/// Outcome of a structural check; `diagnostic` names the first violation.
struct CheckResult {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Circle method: vertex n-1 is fixed; round r matches n-1 with r and
/// (r+i) mod (n-1) with (r-i) mod (n-1) for i = 1..n/2-1.
Factorization one_factorize_complete(int order);

/// d perfect matchings of a d-regular bipartite graph, peeled off one at a
/// time by augmenting paths.
Factorization one_factorize_regular_bipartite(const Graph& g);

/// Circle method for K_n (n even), augmenting paths for regular bipartite
/// graphs. Other graphs are rejected with std::invalid_argument.
Factorization one_factorize(const Graph& g);

CheckResult validate_factorization(const Factorization& f);

/// Per-edge direction over the canonical edge order. Bit 0 means the arc runs
/// from the low-index endpoint to the high-index one.
class Orientation {
 public:
  Orientation() = default;
  Orientation(Graph base, std::vector<std::uint8_t> reversed);

  /// All arcs low -> high.
  static Orientation forward(Graph base);

  const Graph& base() const noexcept { return base_; }
  std::span<const std::uint8_t> reversed_bits() const noexcept { return reversed_; }
  bool reversed(int edge) const { return reversed_.at(static_cast<std::size_t>(edge)) != 0; }

  int tail(int edge) const;
  int head(int edge) const;

  std::vector<int> outdegrees() const;
  std::vector<int> indegrees() const;

  /// Every arc reversed.
  Orientation converse() const;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.base_ == b.base_ && a.reversed_ == b.reversed_;
  }

 private:
  Graph base_;
  std::vector<std::uint8_t> reversed_;
};

int max_outdegree(const Orientation& o);

/// Orientation that walks the edges of each component along an Euler tour
/// (Hierholzer; smallest start vertex, smallest neighbor first). Every vertex
/// ends with outdegree deg/2. Throws std::invalid_argument on odd degrees.
Orientation eulerian_orientation(const Graph& g);

/// Orientation of K_{n,...,n} (k parts, n even) whose restriction to every
/// pair of parts is Eulerian: local vertex i of part a points at local
/// vertex j of part b > a iff i + j is even.
Orientation paper_orientation_multipartite(int k, int n);

/// Orientation of L(f.base): each base vertex's clique (one line-graph vertex
/// per factor) is oriented acyclically from lower to higher factor index.
Orientation paper_orientation_linegraph(const Factorization& f);

/// Factor index of every edge of f.base, i.e. the class of each vertex of
/// L(f.base).
std::vector<int> factor_classes(const Factorization& f);

/// Checks that, for every pair of classes, each vertex has equal in- and
/// out-degree inside the subgraph induced by those two classes.
CheckResult check_pairwise_balance(const Orientation& o, std::span<const int> vertex_class);

/// Checks outdegree == indegree at every vertex.
CheckResult check_balanced(const Orientation& o);

// Orientation text: the base edge list followed by one line of '0'/'1'
// characters, one per canonical edge ('0' = low -> high).
void write_orientation(std::ostream& out, const Orientation& o);
std::string to_orientation_text(const Orientation& o);
Orientation parse_orientation(std::string_view text);

// Factorization text: one line per factor listing its edge indices.
std::string to_factorization_text(const Factorization& f);
Factorization parse_factorization(const Graph& base, std::string_view text);

}  // namespace atnlab
