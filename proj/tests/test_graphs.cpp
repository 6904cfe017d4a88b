#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricsplit/graphs.hpp"

using namespace toricsplit;

TEST(BipartiteGraph, Validation) {
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 0}, {0, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 2}}), std::invalid_argument);
  EXPECT_THROW(BipartiteGraph(2, 2, {{0, 0}, {1, 1}}), std::invalid_argument);
  const auto k = BipartiteGraph::complete(2, 3);
  EXPECT_EQ(k.edges().size(), 6u);
  EXPECT_EQ(k.edge_index(k.left_vertex(1), k.right_vertex(2)), 5);
  EXPECT_EQ(k.edge_index(k.right_vertex(2), k.left_vertex(1)), 5);
  EXPECT_EQ(k.edge_index(0, 1), -1);
}

TEST(BipartiteGraph, IncidenceConfiguration) {
  const auto k = BipartiteGraph::complete(3, 3);
  const auto a = incidence_configuration(k);
  EXPECT_EQ(a.rows(), 6u);
  EXPECT_EQ(a.cols(), 9u);
  EXPECT_EQ(a.height(), 4u);
}

TEST(ChordlessCycles, CompleteBipartiteThreeThree) {
  const auto g = BipartiteGraph::complete(3, 3);
  const auto cycles = chordless_even_cycles(g);
  EXPECT_EQ(cycles.size(), 9u);
  const auto a = incidence_configuration(g);
  for (const auto& c : cycles) {
    EXPECT_EQ(c.vertices.size(), 4u);
    EXPECT_TRUE(a.contains(c.vector(g)));
    EXPECT_EQ(c.odd_edges(g).size(), c.even_edges(g).size());
  }
}

TEST(ChordlessCycles, MatchesInducedSubgraphOracle) {
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2},
                                                               {2, 0}, {3, 0}, {3, 3}, {0, 3}};
  const BipartiteGraph g(4, 4, edges);
  std::vector<LatticeVector> got;
  for (const auto& c : chordless_even_cycles(g)) got.push_back(c.vector(g));
  EXPECT_EQ(canonical_classes(got), oracle::induced_cycles(4, 4, edges));
}

TEST(KmnSplit, CountsAndAssignment) {
  const auto s = kmn_split(3, 3);
  EXPECT_EQ(s.counts, (std::array<std::size_t, 3>{3, 3, 3}));
  EXPECT_TRUE(s.verified);
  EXPECT_EQ(s.assignment.size(), 9u);
  const auto t = kmn_split(2, 4);
  EXPECT_TRUE(t.swapped);
  EXPECT_TRUE(t.verified);
  std::size_t total = 0;
  for (auto c : t.counts) total += c;
  EXPECT_EQ(total, cycle_generators(BipartiteGraph::complete(2, 4)).size());
  EXPECT_THROW(kmn_split(2, 2), std::invalid_argument);
  EXPECT_THROW(kmn_split(1, 5), std::invalid_argument);
}

TEST(GraphSplit, CompleteBipartite) {
  Budget budget;
  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{3, 3}, {2, 3}, {3, 4}}) {
    const auto r = graph_split_numbers(BipartiteGraph::complete(m, n), budget);
    EXPECT_TRUE(r.split.exact()) << m << "x" << n;
    EXPECT_EQ(r.split.lo, 3u) << m << "x" << n;
    EXPECT_EQ(r.split_rad.lo, r.split.lo);
    ASSERT_TRUE(r.certificate);
  }
}

TEST(GraphSplit, DegenerateCases) {
  Budget budget;
  const auto tree = graph_split_numbers(BipartiteGraph(1, 2, {{0, 0}, {0, 1}}), budget);
  EXPECT_FALSE(tree.split.applicable);
  const auto square = graph_split_numbers(BipartiteGraph::complete(2, 2), budget);
  EXPECT_EQ(square.generator_count, 1u);
  EXPECT_FALSE(square.split.applicable);
}
