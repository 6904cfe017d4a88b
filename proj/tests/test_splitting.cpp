#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toricsplit/families.hpp"
#include "toricsplit/graphs.hpp"
#include "toricsplit/splitting.hpp"

using namespace toricsplit;

namespace {

const Configuration& twisted_cubic() {
  static const Configuration a(IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}});
  return a;
}

GeneratorSet cubic_generators() {
  return GeneratorSet({{1, -2, 1, 0}, {0, 1, -2, 1}, {1, -1, -1, 1}}, GeneratorMode::minimal_generators, "t");
}

}  // namespace

TEST(FindCover, RejectsBadArguments) {
  Budget budget;
  EXPECT_THROW(find_cover(twisted_cubic(), cubic_generators(), 1, budget), std::invalid_argument);
  EXPECT_THROW(find_cover(twisted_cubic(), cubic_generators(), 4, budget), std::invalid_argument);
}

TEST(FindCover, HeightTwoNeedsEveryGeneratorAlone) {
  Budget budget;
  EXPECT_FALSE(find_cover(twisted_cubic(), cubic_generators(), 2, budget));
  const auto c = find_cover(twisted_cubic(), cubic_generators(), 3, budget);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->parts, (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
  EXPECT_EQ(c->span_dims, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_TRUE(verify_certificate(twisted_cubic(), cubic_generators(), *c).ok());
}

TEST(FindCover, CompleteBipartiteThreeThree) {
  const auto g = BipartiteGraph::complete(3, 3);
  const auto a = incidence_configuration(g);
  const auto gens = cycle_generators(g);
  Budget budget;
  EXPECT_FALSE(find_cover(a, gens, 2, budget));
  const auto c = find_cover(a, gens, 3, budget);
  ASSERT_TRUE(c);
  EXPECT_TRUE(verify_certificate(a, gens, *c).ok());
  EXPECT_FALSE(oracle::two_cover_exists(gens.vectors(), a.height()));
}

TEST(FindCover, BudgetExhaustion) {
  const auto g = BipartiteGraph::complete(3, 3);
  Budget budget(2);
  EXPECT_THROW(find_cover(incidence_configuration(g), cycle_generators(g), 2, budget), BudgetExceeded);
}

TEST(VerifyCertificate, DetectsTampering) {
  Budget budget;
  auto c = *find_cover(twisted_cubic(), cubic_generators(), 3, budget);
  auto missing = c;
  missing.parts.pop_back();
  EXPECT_FALSE(verify_certificate(twisted_cubic(), cubic_generators(), missing).covers);
  c.witness_configs[0] = IntMatrix{{1, 0, 0, 0}};
  EXPECT_FALSE(verify_certificate(twisted_cubic(), cubic_generators(), c).kernels_match);
}

TEST(Subconfigurations, KernelEqualsPartSpan) {
  const auto rep = build_subconfigurations(twisted_cubic(), cubic_generators(), {{0}, {1}, {2}});
  EXPECT_EQ(rep.kernel_dim, 2u);
  EXPECT_EQ(rep.span_dims, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(rep.kernel_matches, (std::vector<bool>{true, true, true}));
  EXPECT_THROW(build_subconfigurations(twisted_cubic(), cubic_generators(), {{0, 1}, {2}}), std::invalid_argument);
}

TEST(SplitNumbers, PrincipalAndZero) {
  Budget budget;
  const auto principal = split_numbers(Configuration(IntMatrix{{1, 1}}), budget);
  EXPECT_FALSE(principal.split.applicable);
  EXPECT_FALSE(principal.split_rad.applicable);
  const auto zero = split_numbers(Configuration(IntMatrix{{1, 0}, {0, 1}}), budget);
  EXPECT_FALSE(zero.split.applicable);
}

TEST(SplitNumbers, HeightTwoIsMu) {
  Budget budget;
  const auto r = split_numbers(twisted_cubic(), budget);
  EXPECT_TRUE(r.split.exact());
  EXPECT_EQ(r.split.lo, 3u);
  EXPECT_EQ(r.split.method, "height 2: Split = mu");
  ASSERT_TRUE(r.split_certificate);
  EXPECT_TRUE(verify_certificate(twisted_cubic(), *r.minimal_generators, *r.split_certificate).ok());
}

TEST(SplitNumbers, UniqueGeneratorsGiveExactValue) {
  const auto g = BipartiteGraph::complete(3, 3);
  Budget budget;
  const auto r = split_numbers(incidence_configuration(g), budget);
  EXPECT_TRUE(r.split.exact());
  EXPECT_EQ(r.split.lo, 3u);
  EXPECT_EQ(r.unique_minimal_generators, std::optional<bool>(true));
}

TEST(SplitNumbers, RadicalFromCircuits) {
  const auto f = lawrence_of_symmetric_curve(2, 3);
  Budget budget;
  const auto r = split_numbers(f.config, budget, {.assume_circuit_radical = true});
  EXPECT_EQ(r.split.lo, 7u);
  EXPECT_TRUE(r.split_rad.exact());
  EXPECT_EQ(r.split_rad.lo, 4u);
}

TEST(MinimalCover, LeastWorkingR) {
  Budget budget;
  const auto c = minimal_cover(twisted_cubic(), cubic_generators(), budget);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->parts.size(), 3u);
}

TEST(SimplicialShape, Recognition) {
  const auto s = simplicial_shape(IntMatrix{{5, 3, 2, 0}, {0, 2, 3, 5}});
  EXPECT_TRUE(s.simplicial);
  EXPECT_TRUE(s.full_parametrization);
  const auto partial = simplicial_shape(IntMatrix{{2, 0, 1, 0}, {0, 2, 1, 1}});
  EXPECT_TRUE(partial.simplicial);
  EXPECT_FALSE(partial.full_parametrization);
  EXPECT_FALSE(simplicial_shape(IntMatrix{{1, 1, 1, 1}, {0, 2, 3, 5}}).simplicial);
}

TEST(SufficientConditions, HeightTwoRules) {
  Budget budget;
  const Configuration a(IntMatrix{{5, 3, 2, 0}, {0, 2, 3, 5}});
  const auto hits = classify_sufficient_conditions(a, std::nullopt, budget);
  auto has = [&](const std::string& rule) {
    return std::any_of(hits.begin(), hits.end(), [&](const RuleHit& h) { return h.rule == rule; });
  };
  EXPECT_TRUE(has("height 2"));
  EXPECT_TRUE(has("height 2, not a complete intersection"));
  EXPECT_TRUE(has("simplicial, full parametrization"));
}
