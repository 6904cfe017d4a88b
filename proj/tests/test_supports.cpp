#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toricsplit/families.hpp"
#include "toricsplit/supports.hpp"

using namespace toricsplit;

TEST(Circuits, SymmetricCurveHasFour) {
  const Configuration a(IntMatrix{{1, 1, 1, 1}, {0, 2, 3, 5}});
  const auto c = circuits(a);
  // x2^3 - x1 x3^2, x2^5 - x1^3 x4^2, x3^3 - x2^2 x4, x3^5 - x1^2 x4^3
  std::vector<LatticeVector> want{{-1, 3, -2, 0}, {-3, 5, 0, -2}, {0, -2, 3, -1}, {-2, 0, 5, -3}};
  std::vector<LatticeVector> got;
  for (const auto& x : c) got.push_back(x.vector());
  EXPECT_EQ(canonical_classes(got), canonical_classes(want));
}

TEST(Circuits, SupportsAreMinimalAmongBoxVectors) {
  const IntMatrix m{{1, 1, 1, 1, 1}, {0, 1, 3, 4, 6}};
  const Configuration a(m);
  const auto box = oracle::kernel_box(m, 8);
  for (const auto& c : circuits(a)) {
    EXPECT_TRUE(a.contains(c.vector()));
    EXPECT_EQ(c.vector(), c.vector().primitive());
    for (const auto& u : box) {
      if (u.support() == c.support()) continue;
      EXPECT_FALSE(u.support().is_subset_of(c.support())) << u << " inside " << c.vector();
    }
  }
}

TEST(Cmin, InclusionMinimal) {
  const Configuration a(IntMatrix{{1, 1, 1, 1}, {0, 2, 3, 5}});
  const auto m = cmin(a);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (i != j) EXPECT_FALSE(m[i].is_subset_of(m[j]));
}

TEST(Gamma, EdgesHaveWitnesses) {
  const auto f = lawrence_of_symmetric_curve(2, 3);
  const auto g = gamma_graph(f.config);
  EXPECT_EQ(g.vertices.size(), 8u);
  ASSERT_EQ(g.edges.size(), 4u);
  std::vector<bool> covered(8, false);
  for (const auto& e : g.edges) {
    EXPECT_TRUE(f.config.contains(e.witness));
    EXPECT_EQ(e.witness.plus_support(), g.vertices[e.first]);
    EXPECT_EQ(e.witness.minus_support(), g.vertices[e.second]);
    EXPECT_FALSE(covered[e.first] || covered[e.second]);
    covered[e.first] = covered[e.second] = true;
  }
}

TEST(Gamma, EdgesFoundInBoxArePresent) {
  const IntMatrix m{{1, 1, 1, 1}, {0, 1, 3, 4}};
  const Configuration a(m);
  const auto g = gamma_graph(a);
  for (const auto& u : oracle::kernel_box(m, 6)) {
    const auto p = std::find(g.vertices.begin(), g.vertices.end(), u.plus_support());
    const auto q = std::find(g.vertices.begin(), g.vertices.end(), u.minus_support());
    if (p == g.vertices.end() || q == g.vertices.end()) continue;
    EXPECT_TRUE(g.has_edge(static_cast<std::size_t>(p - g.vertices.begin()),
                           static_cast<std::size_t>(q - g.vertices.begin())))
        << u;
  }
}

TEST(Delta01, MatchesDefinitionOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 12;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::bernoulli_distribution coin(0.3);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    const auto d = delta01(n, edges);
    EXPECT_EQ(d.value, oracle::delta01(n, edges)) << "n=" << n << " edges=" << edges.size();
    EXPECT_TRUE(d.witness.disjoint());
    EXPECT_EQ(d.witness.card(), d.value);
    EXPECT_EQ(d.witness.support_size(), n);
  }
}

TEST(Delta01, Examples) {
  // C5: two edges and a singleton.
  const std::vector<std::pair<std::size_t, std::size_t>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_EQ(delta01(5, c5).value, 3u);
  EXPECT_EQ(delta01(3, {}).value, 3u);
}

TEST(BarBounds, LowerIsMaxOfHeightAndDelta) {
  Budget budget;
  const auto f = lawrence_of_symmetric_curve(2, 3);
  const auto b = bar_bounds(f.config, budget, {.assume_circuit_radical = true});
  EXPECT_EQ(b.lo, 4u);
  ASSERT_TRUE(b.hi);
  EXPECT_EQ(*b.hi, 4u);
  EXPECT_TRUE(b.exact());
  const auto plain = bar_bounds(f.config, budget);
  EXPECT_EQ(plain.hi, std::optional<std::size_t>(7));
}
