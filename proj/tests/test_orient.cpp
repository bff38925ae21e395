#include "atnlab/orient.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace atnlab;

namespace {

Orientation directed_cycle(int n) {
  const Graph g = cycle_graph(n);  // edges 01, 0(n-1), 12, ..., ; arc i -> i+1
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) bits[static_cast<std::size_t>(e)] = (g.edge(e).u == 0 && g.edge(e).v == n - 1);
  return Orientation(g, bits);
}

}  // namespace

TEST(ParityDiff, DirectedTriangle) {
  const Orientation o = directed_cycle(3);
  ASSERT_TRUE(check_balanced(o).ok);
  const ParityDiff d = eulerian_parity_diff(o);
  EXPECT_EQ(d.even_count, 1u);
  EXPECT_EQ(d.odd_count, 1u);
  EXPECT_EQ(d.diff(), 0);
}

TEST(ParityDiff, DirectedFourCycle) {
  const ParityDiff d = eulerian_parity_diff(directed_cycle(4));
  EXPECT_EQ(d, (ParityDiff{2, 0}));
  EXPECT_EQ(to_json(d), R"({"even":2,"odd":0,"diff":2})");
}

TEST(ParityDiff, AcyclicHasOnlyEmptySet) {
  const ParityDiff d = eulerian_parity_diff(Orientation::forward(complete_graph(7)));
  EXPECT_EQ(d, (ParityDiff{1, 0}));
}

TEST(ParityDiff, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_small_graph(rng, 2, 9, 14);
    const Orientation o = oracle::random_orientation(g, rng);
    const oracle::Parity ref = oracle::eulerian_parity(o);
    const ParityDiff d = eulerian_parity_diff(o);
    EXPECT_EQ(static_cast<long long>(d.even_count), ref.even) << to_orientation_text(o);
    EXPECT_EQ(static_cast<long long>(d.odd_count), ref.odd) << to_orientation_text(o);
  }
}

TEST(ParityDiff, ConverseHasSameCounts) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_small_graph(rng, 3, 8, 14);
    const Orientation o = oracle::random_orientation(g, rng);
    EXPECT_EQ(eulerian_parity_diff(o), eulerian_parity_diff(o.converse()));
  }
}

TEST(ParityDiff, BudgetPerCall) {
  Budget tight;
  tight.max_subsets = 1000;
  const Orientation o = eulerian_orientation(complete_graph(5));
  EXPECT_THROW(eulerian_parity_diff(o, tight), BudgetExceeded);
  WorkStats w;
  (void)eulerian_parity_diff(o, {}, &w);
  EXPECT_GT(w.subsets, 0u);
  EXPECT_LE(w.subsets, std::uint64_t{1} << 10);
}

TEST(Sign, CountsBackwardArcs) {
  const Graph g = cycle_graph(4);
  EXPECT_EQ(orientation_sign(Orientation::forward(g)), 1);
  EXPECT_EQ(orientation_sign(Orientation(g, {1, 0, 0, 0})), -1);
  EXPECT_EQ(orientation_sign(Orientation(g, {1, 1, 0, 0})), 1);
}

TEST(Correspondence, DirectedFourCycle) {
  const CorrespondenceReport r = verify_correspondence(directed_cycle(4));
  EXPECT_EQ(r.diff, 2);
  EXPECT_EQ(abs(r.coefficient), 2);
  EXPECT_TRUE(r.abs_match);
  EXPECT_TRUE(r.signed_match);
}

TEST(Correspondence, SignedFormOnRandomPairs) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_small_graph(rng, 2, 9, 14);
    const Orientation o = oracle::random_orientation(g, rng);
    const CorrespondenceReport r = verify_correspondence(o);
    const long long ref = oracle::coefficient(g, o.outdegrees());
    EXPECT_EQ(r.coefficient, ref);
    EXPECT_TRUE(r.abs_match) << to_orientation_text(o);
    EXPECT_TRUE(r.signed_match) << to_orientation_text(o);
  }
}

TEST(CoefficientViaOrientations, MatchesExpansion) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_small_graph(rng, 2, 7, 11);
    for (const auto& [exps, c] : oracle::expand(g)) EXPECT_EQ(coefficient_via_orientations(g, ExponentVector(exps)), c);
    std::vector<int> wrong(static_cast<std::size_t>(g.order()), 0);
    if (g.size() > 0) EXPECT_EQ(coefficient_via_orientations(g, ExponentVector(wrong)), 0);
  }
}

TEST(AtnOrient, MatchesPolynomialAndWitnessCertifies) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_small_graph(rng, 1, 10, 14);
    const OrientationAtn r = atn_via_orientations(g);
    EXPECT_EQ(r.atn, atn_via_polynomial(g)) << to_edge_list(g);
    EXPECT_EQ(r.witness.base(), g);
    EXPECT_LE(max_outdegree(r.witness), r.atn - 1);
    EXPECT_NE(r.parity.diff(), 0);
    EXPECT_EQ(r.parity, eulerian_parity_diff(r.witness));
  }
}

TEST(AtnOrient, KnownValues) {
  EXPECT_EQ(atn_via_orientations(complete_bipartite(2, 2)).atn, 2);
  EXPECT_EQ(atn_via_orientations(complete_bipartite(4, 4)).atn, 3);
  EXPECT_EQ(atn_via_orientations(complete_graph(4)).atn, 4);
  EXPECT_EQ(atn_via_orientations(line_graph(complete_graph(4))).atn, 3);
  EXPECT_EQ(atn_via_orientations(Graph(4, {})).atn, 1);
}

TEST(AtnOrient, Bounded) {
  EXPECT_FALSE(atn_via_orientations_bounded(complete_graph(4), 3));
  const auto r = atn_via_orientations_bounded(complete_graph(4), 4);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->atn, 4);
}

TEST(AtnOrient, BudgetExceeded) {
  Budget tight;
  tight.max_search_nodes = 3;
  EXPECT_THROW(atn_via_orientations(complete_graph(6), tight), BudgetExceeded);
}
