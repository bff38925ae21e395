#include "atnlab/factor.hpp"

#include "matching.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace atnlab {

Factorization one_factorize_complete(int order) {
  if (order < 2 || order % 2 != 0) {
    throw std::invalid_argument("one_factorize_complete: order must be even and >= 2, got " +
                                std::to_string(order));
  }
  Factorization f{complete_graph(order), {}};
  const int rounds = order - 1;
  for (int r = 0; r < rounds; ++r) {
    std::vector<int> factor;
    factor.push_back(*f.base.edge_index(order - 1, r));
    for (int i = 1; i < order / 2; ++i) {
      int a = (r + i) % rounds;
      int b = ((r - i) % rounds + rounds) % rounds;
      factor.push_back(*f.base.edge_index(a, b));
    }
    f.factors.push_back(std::move(factor));
  }
  return f;
}

Factorization one_factorize_regular_bipartite(const Graph& g) {
  auto side = bipartition(g);
  if (!side) throw std::invalid_argument("one_factorize_regular_bipartite: graph is not bipartite");
  if (!g.is_regular()) throw std::invalid_argument("one_factorize_regular_bipartite: graph is not regular");

  std::vector<int> left, right_index(static_cast<std::size_t>(g.order()), -1);
  int right_count = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((*side)[static_cast<std::size_t>(v)] == 0) {
      left.push_back(v);
    } else {
      right_index[static_cast<std::size_t>(v)] = right_count++;
    }
  }
  Factorization f{g, {}};
  const int degree = g.order() == 0 ? 0 : g.max_degree();
  std::vector<char> removed(static_cast<std::size_t>(g.size()), 0);

  for (int t = 0; t < degree; ++t) {
    std::vector<std::vector<int>> adjacency(left.size());
    std::vector<std::vector<int>> edge_of(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) {
      for (int e : g.incident_edges(left[i])) {
        if (removed[static_cast<std::size_t>(e)]) continue;
        const Edge& edge = g.edge(e);
        int other = edge.u == left[i] ? edge.v : edge.u;
        adjacency[i].push_back(right_index[static_cast<std::size_t>(other)]);
        edge_of[i].push_back(e);
      }
    }
    auto matching = detail::perfect_bipartite_matching(adjacency, right_count);
    // Removing a perfect matching keeps the graph regular and bipartite, so
    // Hall's condition holds at every round.
    if (!matching) throw std::logic_error("one_factorize_regular_bipartite: no perfect matching");
    std::vector<int> factor;
    for (std::size_t i = 0; i < left.size(); ++i) {
      auto pos = std::find(adjacency[i].begin(), adjacency[i].end(), (*matching)[i]) - adjacency[i].begin();
      int e = edge_of[i][static_cast<std::size_t>(pos)];
      removed[static_cast<std::size_t>(e)] = 1;
      factor.push_back(e);
    }
    std::sort(factor.begin(), factor.end());
    f.factors.push_back(std::move(factor));
  }
  return f;
}

Factorization one_factorize(const Graph& g) {
  const long long n = g.order();
  if (n >= 2 && g.size() == n * (n - 1) / 2) {
    if (n % 2 != 0) throw std::invalid_argument("one_factorize: K_" + std::to_string(n) + " has odd order");
    return one_factorize_complete(static_cast<int>(n));
  }
  if (bipartition(g) && g.is_regular()) return one_factorize_regular_bipartite(g);
  throw std::invalid_argument(
      "one_factorize: only complete graphs of even order and regular bipartite graphs are supported");
}

CheckResult validate_factorization(const Factorization& f) {
  const Graph& g = f.base;
  std::vector<int> owner(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    std::vector<int> covered(static_cast<std::size_t>(g.order()), 0);
    for (int e : f.factors[k]) {
      if (e < 0 || e >= g.size()) {
        return CheckResult::fail("factor " + std::to_string(k) + " references edge index " +
                                 std::to_string(e) + " outside 0.." + std::to_string(g.size() - 1));
      }
      auto& o = owner[static_cast<std::size_t>(e)];
      if (o >= 0) {
        return CheckResult::fail("edge " + std::to_string(e) + " appears in factors " +
                                 std::to_string(o) + " and " + std::to_string(k));
      }
      o = static_cast<int>(k);
      ++covered[static_cast<std::size_t>(g.edge(e).u)];
      ++covered[static_cast<std::size_t>(g.edge(e).v)];
    }
    for (int v = 0; v < g.order(); ++v) {
      if (covered[static_cast<std::size_t>(v)] != 1) {
        return CheckResult::fail("factor " + std::to_string(k) + " covers vertex " + std::to_string(v) +
                                 " " + std::to_string(covered[static_cast<std::size_t>(v)]) +
                                 " times; a perfect matching covers it once");
      }
    }
  }
  for (int e = 0; e < g.size(); ++e) {
    if (owner[static_cast<std::size_t>(e)] < 0) {
      return CheckResult::fail("edge " + std::to_string(e) + " is not in any factor");
    }
  }
  return CheckResult::pass();
}

Orientation::Orientation(Graph base, std::vector<std::uint8_t> reversed)
    : base_(std::move(base)), reversed_(std::move(reversed)) {
  if (static_cast<int>(reversed_.size()) != base_.size()) {
    throw std::invalid_argument("orientation: expected " + std::to_string(base_.size()) +
                                " direction bits, got " + std::to_string(reversed_.size()));
  }
  for (auto& bit : reversed_) bit = bit ? 1 : 0;
}

Orientation Orientation::forward(Graph base) {
  auto m = static_cast<std::size_t>(base.size());
  return Orientation(std::move(base), std::vector<std::uint8_t>(m, 0));
}

int Orientation::tail(int edge) const {
  const Edge& e = base_.edge(edge);
  return reversed(edge) ? e.v : e.u;
}

int Orientation::head(int edge) const {
  const Edge& e = base_.edge(edge);
  return reversed(edge) ? e.u : e.v;
}

std::vector<int> Orientation::outdegrees() const {
  std::vector<int> out(static_cast<std::size_t>(base_.order()), 0);
  for (int e = 0; e < base_.size(); ++e) ++out[static_cast<std::size_t>(tail(e))];
  return out;
}

std::vector<int> Orientation::indegrees() const {
  std::vector<int> in(static_cast<std::size_t>(base_.order()), 0);
  for (int e = 0; e < base_.size(); ++e) ++in[static_cast<std::size_t>(head(e))];
  return in;
}

Orientation Orientation::converse() const {
  std::vector<std::uint8_t> flipped(reversed_);
  for (auto& bit : flipped) bit ^= 1;
  return Orientation(base_, std::move(flipped));
}

int max_outdegree(const Orientation& o) {
  auto out = o.outdegrees();
  return out.empty() ? 0 : *std::max_element(out.begin(), out.end());
}

Orientation eulerian_orientation(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) {
      throw std::invalid_argument("eulerian_orientation: vertex " + std::to_string(v) +
                                  " has odd degree " + std::to_string(g.degree(v)));
    }
  }
  std::vector<std::uint8_t> reversed(static_cast<std::size_t>(g.size()), 0);
  std::vector<char> used(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> stack;

  for (int start = 0; start < g.order(); ++start) {
    stack.assign(1, start);
    while (!stack.empty()) {
      int v = stack.back();
      auto inc = g.incident_edges(v);
      auto& c = cursor[static_cast<std::size_t>(v)];
      while (c < inc.size() && used[static_cast<std::size_t>(inc[c])]) ++c;
      if (c == inc.size()) {
        stack.pop_back();
        continue;
      }
      int e = inc[c];
      used[static_cast<std::size_t>(e)] = 1;
      const Edge& edge = g.edge(e);
      int w = edge.u == v ? edge.v : edge.u;
      reversed[static_cast<std::size_t>(e)] = v > w ? 1 : 0;
      stack.push_back(w);
    }
  }
  return Orientation(g, std::move(reversed));
}

Orientation paper_orientation_multipartite(int k, int n) {
  if (k < 2) throw std::invalid_argument("paper_orientation_multipartite: need k >= 2 parts");
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("paper_orientation_multipartite: part size must be even and >= 2, got " +
                                std::to_string(n));
  }
  std::vector<int> parts(static_cast<std::size_t>(k), n);
  Graph g = complete_multipartite(parts);
  std::vector<std::uint8_t> reversed;
  reversed.reserve(static_cast<std::size_t>(g.size()));
  for (const Edge& e : g.edges()) {
    int i = e.u % n;
    int j = e.v % n;
    reversed.push_back((i + j) % 2 != 0 ? 1 : 0);
  }
  return Orientation(std::move(g), std::move(reversed));
}

std::vector<int> factor_classes(const Factorization& f) {
  std::vector<int> cls(static_cast<std::size_t>(f.base.size()), -1);
  for (std::size_t k = 0; k < f.factors.size(); ++k)
    for (int e : f.factors[k]) cls.at(static_cast<std::size_t>(e)) = static_cast<int>(k);
  return cls;
}

Orientation paper_orientation_linegraph(const Factorization& f) {
  if (auto check = validate_factorization(f); !check) {
    throw std::invalid_argument("paper_orientation_linegraph: invalid factorization: " + check.diagnostic);
  }
  if (!f.base.is_regular()) throw std::invalid_argument("paper_orientation_linegraph: base graph is not regular");
  if (f.base.size() == 0) return Orientation::forward(Graph());
  Graph lg = line_graph(f.base);
  auto cls = factor_classes(f);
  std::vector<std::uint8_t> reversed;
  reversed.reserve(static_cast<std::size_t>(lg.size()));
  for (const Edge& e : lg.edges()) {
    reversed.push_back(cls[static_cast<std::size_t>(e.u)] > cls[static_cast<std::size_t>(e.v)] ? 1 : 0);
  }
  return Orientation(std::move(lg), std::move(reversed));
}

CheckResult check_pairwise_balance(const Orientation& o, std::span<const int> vertex_class) {
  const Graph& g = o.base();
  if (static_cast<int>(vertex_class.size()) != g.order()) {
    throw std::invalid_argument("check_pairwise_balance: one class per vertex is required");
  }
  // net[(v, c)] = out - in of v along arcs to vertices of class c.
  std::map<std::pair<int, int>, int> net;
  std::vector<int> classes(vertex_class.begin(), vertex_class.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (int e = 0; e < g.size(); ++e) {
    int t = o.tail(e), h = o.head(e);
    ++net[{t, vertex_class[static_cast<std::size_t>(h)]}];
    --net[{h, vertex_class[static_cast<std::size_t>(t)]}];
  }
  auto lookup = [&](int v, int c) {
    auto it = net.find({v, c});
    return it == net.end() ? 0 : it->second;
  };
  for (int v = 0; v < g.order(); ++v) {
    int own = vertex_class[static_cast<std::size_t>(v)];
    for (int c : classes) {
      if (c == own) continue;
      int balance = lookup(v, c) + lookup(v, own);
      if (balance != 0) {
        return CheckResult::fail("vertex " + std::to_string(v) + " (class " + std::to_string(own) +
                                 ") has out-in = " + std::to_string(balance) + " within classes {" +
                                 std::to_string(std::min(own, c)) + "," +
                                 std::to_string(std::max(own, c)) + "}");
      }
    }
  }
  return CheckResult::pass();
}

CheckResult check_balanced(const Orientation& o) {
  auto out = o.outdegrees();
  auto in = o.indegrees();
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (out[v] != in[v]) {
      return CheckResult::fail("vertex " + std::to_string(v) + " has outdegree " + std::to_string(out[v]) +
                               " and indegree " + std::to_string(in[v]));
    }
  }
  return CheckResult::pass();
}

void write_orientation(std::ostream& out, const Orientation& o) {
  write_edge_list(out, o.base());
  for (auto bit : o.reversed_bits()) out << (bit ? '1' : '0');
  out << '\n';
}

std::string to_orientation_text(const Orientation& o) {
  std::ostringstream out;
  write_orientation(out, o);
  return out.str();
}

Orientation parse_orientation(std::string_view text) {
  std::istringstream in{std::string(text)};
  Graph g = read_edge_list(in);
  std::string bits;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char ch : line) {
      if (ch == ' ' || ch == '\t' || ch == '\r') continue;
      if (ch != '0' && ch != '1') {
        throw std::invalid_argument(std::string("orientation: direction line may only contain '0' and '1', found '") +
                                    ch + "'");
      }
      bits.push_back(ch);
    }
  }
  if (static_cast<int>(bits.size()) != g.size()) {
    throw std::invalid_argument("orientation: expected " + std::to_string(g.size()) +
                                " direction bits, found " + std::to_string(bits.size()));
  }
  std::vector<std::uint8_t> reversed;
  for (char ch : bits) reversed.push_back(ch == '1' ? 1 : 0);
  return Orientation(std::move(g), std::move(reversed));
}

std::string to_factorization_text(const Factorization& f) {
  std::ostringstream out;
  for (const auto& factor : f.factors) {
    for (std::size_t i = 0; i < factor.size(); ++i) out << (i ? " " : "") << factor[i];
    out << '\n';
  }
  return out.str();
}

Factorization parse_factorization(const Graph& base, std::string_view text) {
  Factorization f{base, {}};
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::vector<int> factor;
    int e = 0;
    while (row >> e) factor.push_back(e);
    if (!row.eof()) throw std::invalid_argument("factorization: non-integer token in \"" + line + "\"");
    f.factors.push_back(std::move(factor));
  }
  return f;
}

}  // namespace atnlab
