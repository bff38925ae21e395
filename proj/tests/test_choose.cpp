#include "atnlab/choose.hpp"

#include "atnlab/poly.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace atnlab;

namespace {

// Every 2-list assignment over {0..2n-1}; enough colors for any pattern.
bool two_choosable_exhaustive(const Graph& g) {
  const int n = g.order();
  const int u = 2 * n;
  std::vector<std::vector<int>> pairs;
  for (int a = 0; a < u; ++a)
    for (int b = a + 1; b < u; ++b) pairs.push_back({a, b});
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<std::vector<int>> lists;
    for (std::size_t i : idx) lists.push_back(pairs[i]);
    if (!oracle::list_colorable(g, lists)) return false;
    int v = 0;
    while (v < n && ++idx[static_cast<std::size_t>(v)] == pairs.size()) idx[static_cast<std::size_t>(v++)] = 0;
    if (v == n) return true;
  }
}

}  // namespace

TEST(ListColoring, FindsProperColoring) {
  const Graph g = cycle_graph(5);
  const ListAssignment la{{{0, 1}, {1, 2}, {0, 2}, {0, 1}, {1, 2}}};
  const auto c = proper_coloring_exists(g, la);
  ASSERT_TRUE(c);
  EXPECT_TRUE(oracle::proper(g, *c));
  for (int v = 0; v < 5; ++v) {
    const auto& l = la.lists[static_cast<std::size_t>(v)];
    EXPECT_NE(std::find(l.begin(), l.end(), (*c)[static_cast<std::size_t>(v)]), l.end());
  }
  const ListAssignment same{{{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}};
  EXPECT_FALSE(proper_coloring_exists(g, same));
  EXPECT_THROW(proper_coloring_exists(g, ListAssignment{{{0}}}), std::invalid_argument);
  EXPECT_THROW(proper_coloring_exists(complete_graph(2), ListAssignment{{{64}, {0}}}), std::invalid_argument);
}

TEST(Choosability, K33IsNotTwoChoosable) {
  const Graph g = complete_bipartite(3, 3);
  const ChoosabilityResult r = is_k_choosable(g, 2);
  ASSERT_EQ(r.verdict, Verdict::no);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(oracle::list_colorable(g, r.witness->lists));
  for (const auto& l : r.witness->lists) EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(witness_json(*r.witness, false), R"({"lists":[[0,1],[0,2],[1,2],[0,1],[0,2],[1,2]],"colorable":false})");
  EXPECT_EQ(is_k_choosable(g, 3).verdict, Verdict::yes);
}

TEST(Choosability, SmallChoiceNumbers) {
  EXPECT_EQ(choice_number(complete_bipartite(2, 2), 4), 2);
  EXPECT_EQ(choice_number(cycle_graph(4), 4), 2);
  EXPECT_EQ(choice_number(cycle_graph(5), 4), 3);
  EXPECT_EQ(choice_number(complete_graph(3), 4), 3);
  EXPECT_EQ(choice_number(complete_graph(4), 5), 4);
  EXPECT_EQ(choice_number(complete_bipartite(2, 3), 4), 2);
  EXPECT_EQ(choice_number(Graph(3, {}), 3), 1);
  const std::array<int, 3> parts{2, 2, 2};
  EXPECT_EQ(choice_number(complete_multipartite(parts), 4), 3);
}

TEST(Choosability, AgreesWithExhaustiveTwoLists) {
  const std::vector<Graph> graphs{path_graph(4),
                                  cycle_graph(4),
                                  complete_bipartite(1, 3),
                                  complete_graph(3),
                                  Graph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}),
                                  Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}})};
  for (const Graph& g : graphs) {
    const bool yes = is_k_choosable(g, 2).verdict == Verdict::yes;
    EXPECT_EQ(yes, two_choosable_exhaustive(g)) << to_edge_list(g);
  }
}

TEST(Choosability, WitnessesAreGenuine) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const Graph g = oracle::random_small_graph(rng, 3, 7, 10);
    for (int k = 1; k <= 3; ++k) {
      const ChoosabilityResult r = is_k_choosable(g, k);
      ASSERT_NE(r.verdict, Verdict::unknown);
      if (r.verdict == Verdict::no) {
        ASSERT_TRUE(r.witness);
        EXPECT_FALSE(oracle::list_colorable(g, r.witness->lists));
      }
    }
  }
}

TEST(Choosability, ChainChromaticChoiceAtn) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_small_graph(rng, 3, 7, 10);
    const int chi = chromatic_number(g);
    const int at = atn_via_polynomial(g);
    const auto ch = choice_number(g, at);
    ASSERT_TRUE(ch) << to_edge_list(g);
    EXPECT_LE(chi, *ch);
    EXPECT_LE(*ch, at);
  }
}

TEST(Choosability, BudgetGivesUnknown) {
  Budget tight;
  tight.max_search_nodes = 10;
  const std::array<int, 3> parts{2, 2, 2};
  EXPECT_EQ(is_k_choosable(complete_multipartite(parts), 3, tight).verdict, Verdict::unknown);
  EXPECT_EQ(verdict_name(Verdict::unknown), "unknown");
}

TEST(Chromatic, KnownValues) {
  EXPECT_EQ(chromatic_number(Graph(3, {})), 1);
  EXPECT_EQ(chromatic_number(Graph(0, {})), 0);
  EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
  EXPECT_EQ(chromatic_number(cycle_graph(6)), 2);
  EXPECT_EQ(chromatic_number(complete_graph(6)), 6);
  EXPECT_EQ(chromatic_number(line_graph(complete_graph(4))), 3);
  EXPECT_EQ(chromatic_number(total_graph(complete_graph(4))), 5);
  EXPECT_THROW(chromatic_number(path_graph(17)), std::invalid_argument);
}

TEST(Choosability, DisconnectedWitnessCoversEveryVertex) {
  // K_{3,3} on 0..5 plus a path on 6..8 and an isolated vertex 9
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) edges.push_back({a, b});
  edges.push_back({6, 7});
  edges.push_back({7, 8});
  const Graph g(10, edges);
  const ChoosabilityResult r = is_k_choosable(g, 2);
  ASSERT_EQ(r.verdict, Verdict::no);
  ASSERT_EQ(r.witness->lists.size(), 10u);
  EXPECT_FALSE(oracle::list_colorable(g, r.witness->lists));
}

TEST(Choosability, ForestsAreTwoChoosableWithoutSearch) {
  const Graph tree(7, {{0, 2}, {1, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 6}});
  const ChoosabilityResult r = is_k_choosable(tree, 2);
  EXPECT_EQ(r.verdict, Verdict::yes);
  EXPECT_EQ(r.assignments, 0u);
  EXPECT_EQ(is_k_choosable(tree, 1).verdict, Verdict::no);
}
