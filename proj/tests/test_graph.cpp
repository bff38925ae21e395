#include "atnlab/graph.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>
#include <sstream>

using namespace atnlab;

namespace {

int choose2(int d) { return d * (d - 1) / 2; }

}  // namespace

TEST(Graph, NormalizesAndSortsEdges) {
  const Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 2}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.edge(2), (Edge{1, 3}));
  EXPECT_EQ(g.edge_index(3, 1), 2);
  EXPECT_FALSE(g.edge_index(0, 3).has_value());
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.min_degree(), 1);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{-1, 2}}), std::invalid_argument);
  EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
}

TEST(Graph, IncidentEdgesFollowOtherEndpoint) {
  const Graph g = complete_graph(4);
  const auto inc = g.incident_edges(2);
  ASSERT_EQ(inc.size(), 3u);
  EXPECT_EQ(g.edge(inc[0]), (Edge{0, 2}));
  EXPECT_EQ(g.edge(inc[1]), (Edge{1, 2}));
  EXPECT_EQ(g.edge(inc[2]), (Edge{2, 3}));
}

TEST(Families, Sizes) {
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(complete_bipartite(3, 6).size(), 18);
  const std::array<int, 3> parts{2, 2, 2};
  const Graph k222 = complete_multipartite(parts);
  EXPECT_EQ(k222.order(), 6);
  EXPECT_EQ(k222.size(), 12);
  EXPECT_TRUE(k222.is_regular());
  EXPECT_FALSE(k222.adjacent(0, 1));
  EXPECT_TRUE(k222.adjacent(1, 2));
  EXPECT_EQ(cycle_graph(5).size(), 5);
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(path_graph(1).size(), 0);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Families, CirculantBipartite) {
  const Graph c = circulant_bipartite(4, 2);
  EXPECT_EQ(c.order(), 8);
  EXPECT_EQ(c.size(), 8);
  EXPECT_TRUE(c.is_regular());
  EXPECT_TRUE(oracle::isomorphic(c, cycle_graph(8)));
  EXPECT_EQ(circulant_bipartite(3, 3), complete_bipartite(3, 3));
  EXPECT_THROW(circulant_bipartite(3, 4), std::invalid_argument);
  EXPECT_THROW(circulant_bipartite(3, 0), std::invalid_argument);
}

TEST(Families, BuildByName) {
  const auto f = parse_family("complete_bipartite");
  ASSERT_TRUE(f);
  EXPECT_EQ(build_family({*f, {2, 3}}), complete_bipartite(2, 3));
  EXPECT_EQ(family_name(Family::circulant_bipartite), "circulant_bipartite");
  EXPECT_FALSE(parse_family("petersen"));
  EXPECT_THROW(build_family({Family::complete, {1, 2}}), std::invalid_argument);
}

TEST(LineGraph, CountsAndStructure) {
  for (const Graph& g : {complete_graph(4), complete_graph(5), cycle_graph(6), complete_bipartite(2, 3)}) {
    const Graph lg = line_graph(g);
    int expected = 0;
    for (int v = 0; v < g.order(); ++v) expected += choose2(g.degree(v));
    EXPECT_EQ(lg.order(), g.size());
    EXPECT_EQ(lg.size(), expected);
    for (const auto& e : lg.edges()) {
      const Edge a = g.edge(e.u), b = g.edge(e.v);
      EXPECT_TRUE(a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
    }
  }
  EXPECT_EQ(line_graph(complete_graph(3)).vertex_labels().at(0), "edge {0,1}");
}

TEST(LineGraph, CycleIsSelfLine) {
  EXPECT_TRUE(oracle::isomorphic(line_graph(cycle_graph(4)), cycle_graph(4)));
  EXPECT_TRUE(oracle::isomorphic(line_graph(cycle_graph(7)), cycle_graph(7)));
  EXPECT_TRUE(oracle::isomorphic(line_graph(complete_bipartite(2, 2)), cycle_graph(4)));
}

TEST(LineGraph, EdgelessThrows) { EXPECT_THROW(line_graph(Graph(3, {})), std::invalid_argument); }

TEST(TotalGraph, Counts) {
  for (const Graph& g : {complete_graph(3), complete_graph(4), cycle_graph(5), path_graph(4)}) {
    const Graph t = total_graph(g);
    int line_edges = 0;
    for (int v = 0; v < g.order(); ++v) line_edges += choose2(g.degree(v));
    EXPECT_EQ(t.order(), g.order() + g.size());
    EXPECT_EQ(t.size(), g.size() + 2 * g.size() + line_edges);
    // every vertex of T(G) has degree 2 deg(v) or 2 (+ line-graph degree)
    for (int v = 0; v < g.order(); ++v) EXPECT_EQ(t.degree(v), 2 * g.degree(v));
  }
  const Graph tk3 = total_graph(complete_graph(3));
  EXPECT_EQ(tk3.order(), 6);
  EXPECT_EQ(tk3.size(), 12);
  EXPECT_EQ(tk3.max_degree(), 4);
  EXPECT_EQ(total_graph(complete_graph(4)).size(), 30);
  EXPECT_EQ(tk3.vertex_labels().at(0), "vertex 0");
  EXPECT_EQ(tk3.vertex_labels().at(3), "edge {0,1}");
}

TEST(SubdivisionGraph, Counts) {
  const Graph s = subdivision_graph(complete_graph(4));
  EXPECT_EQ(s.order(), 10);
  EXPECT_EQ(s.size(), 12);
  EXPECT_TRUE(bipartition(s).has_value());
}

TEST(LowerBound, ExactRational) {
  EXPECT_EQ(atn_lower_bound(complete_bipartite(3, 6)), Rational(2));
  EXPECT_EQ(atn_lower_bound(complete_graph(4)), Rational(3, 2));
  EXPECT_EQ(ceil_edge_density(complete_graph(4)), 2);
  EXPECT_EQ(ceil_edge_density(Graph(3, {})), 0);
}

TEST(Bipartition, Sides) {
  const Graph c6 = cycle_graph(6);
  const auto sides = bipartition(c6);
  ASSERT_TRUE(sides);
  EXPECT_EQ((*sides)[0], 0);
  for (const auto& e : c6.edges()) EXPECT_NE((*sides)[e.u], (*sides)[e.v]);
  EXPECT_FALSE(bipartition(cycle_graph(5)));
}

TEST(Random, SeededAndExact) {
  EXPECT_EQ(random_graph(8, 12, 7), random_graph(8, 12, 7));
  EXPECT_EQ(random_graph(8, 12, 7).size(), 12);
  EXPECT_EQ(random_graph(5, 10, 1), complete_graph(5));
  EXPECT_THROW(random_graph(4, 7, 1), std::invalid_argument);
}

TEST(Random, RegularBipartite) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = random_regular_bipartite(6, 3, seed);
    EXPECT_EQ(g.order(), 12);
    EXPECT_EQ(g.size(), 18);
    EXPECT_TRUE(g.is_regular());
    EXPECT_EQ(g.max_degree(), 3);
    for (const auto& e : g.edges()) EXPECT_TRUE(e.u < 6 && e.v >= 6);
  }
  EXPECT_EQ(random_regular_bipartite(5, 2, 9), random_regular_bipartite(5, 2, 9));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = complete_bipartite(2, 3);
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text, "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
  EXPECT_EQ(parse_edge_list(text), g);
  EXPECT_EQ(parse_edge_list("# comment\n\n3 1\n\n0 2  # trailing\n"), Graph(3, {{0, 2}}));
}

TEST(EdgeList, StrictReader) {
  EXPECT_THROW(parse_edge_list(""), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);          // short
  EXPECT_THROW(parse_edge_list("3 1\n1 0\n"), std::invalid_argument);          // u > v
  EXPECT_THROW(parse_edge_list("3 2\n1 2\n0 1\n"), std::invalid_argument);     // order
  EXPECT_THROW(parse_edge_list("3 1\n0 3\n"), std::invalid_argument);          // range
  EXPECT_THROW(parse_edge_list("3 1\n0 1\n1 2\n"), std::invalid_argument);     // trailing
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 2\n"), std::invalid_argument);
}

TEST(EdgeList, StreamStopsAfterLastEdge) {
  std::istringstream in("2 1\n0 1\n0101\n");
  EXPECT_EQ(read_edge_list(in), complete_graph(2));
  std::string rest;
  std::getline(in >> std::ws, rest);
  EXPECT_EQ(rest, "0101");
}

TEST(Graph, Describe) { EXPECT_EQ(describe(complete_graph(4)), "n=4 m=6"); }
