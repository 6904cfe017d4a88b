#include <gtest/gtest.h>

#include <numeric>

#include "toricsplit/families.hpp"
#include "toricsplit/supports.hpp"

using namespace toricsplit;

TEST(SymmetricCurve, ListedGeneratorsAreInTheKernel) {
  for (std::int64_t b = 2; b <= 6; ++b)
    for (std::int64_t a = 1; a < b; ++a) {
      const auto f = symmetric_curve(a, b);
      ASSERT_TRUE(f.generators);
      EXPECT_EQ(f.generators->size(), static_cast<std::size_t>(b - a + 2));
      EXPECT_NO_THROW(f.generators->validate(f.config));
      for (const auto& v : *f.graver) EXPECT_TRUE(f.config.contains(v));
      EXPECT_EQ(f.warnings.empty(), std::gcd(a, b) == 1) << a << "," << b;
    }
  EXPECT_THROW(symmetric_curve(3, 3), std::invalid_argument);
  EXPECT_THROW(symmetric_curve(0, 3), std::invalid_argument);
}

TEST(Lawrence, LiftingShape) {
  const Configuration a(IntMatrix{{1, 1, 1, 1}, {0, 2, 3, 5}});
  const auto l = lawrence_lifting(a);
  EXPECT_EQ(l.rows(), 6u);
  EXPECT_EQ(l.cols(), 8u);
  EXPECT_EQ(l.height(), a.height());
  EXPECT_TRUE(l.contains(LatticeVector({1, -1, -1, 1, -1, 1, 1, -1})));
}

TEST(Cyclic, Shape) {
  const auto f = cyclic_configuration(2);
  EXPECT_EQ(f.config.rows(), 3u);
  EXPECT_EQ(f.config.cols(), 5u);
  EXPECT_EQ(circuits(f.config).size(), 5u);
  for (const auto& e : cmin(f.config)) EXPECT_EQ(e.size(), 2u);
  EXPECT_THROW(cyclic_configuration(2, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(cyclic_configuration(2, {0, 2, 1, 3, 4}), std::invalid_argument);
}

TEST(Cyclic, CminGapsAreTwoExceptOnce) {
  for (std::size_t d : {2u, 3u}) {
    const auto f = cyclic_configuration(d);
    for (const auto& e : cmin(f.config)) {
      ASSERT_EQ(e.size(), d);
      std::size_t threes = 0;
      for (std::size_t k = 0; k + 1 < e.size(); ++k) {
        const auto gap = e.indices()[k + 1] - e.indices()[k];
        EXPECT_TRUE(gap == 2 || gap == 3);
        threes += gap == 3;
      }
      EXPECT_LE(threes, 1u);
    }
  }
}

TEST(Catalogue, BuiltinEntries) {
  const auto& c = Catalogue::builtin();
  EXPECT_EQ(c.version(), 1);
  for (const char* id : {"ex2_8", "ex4_4", "ex4_5", "k33"}) EXPECT_NO_THROW(c.entry(id));
  EXPECT_THROW(c.entry("nope"), std::invalid_argument);
  const auto& e = c.entry("ex4_4");
  EXPECT_EQ(c.find_by_matrix(e.matrix), &e);
  ASSERT_NE(e.generator_set("minimal"), nullptr);
  EXPECT_EQ(e.find("split_rad").size(), 2u);
}

TEST(Catalogue, ParseErrors) {
  EXPECT_THROW(Catalogue::parse("{"), std::invalid_argument);
  EXPECT_THROW(Catalogue::parse(R"({"version": 1, "entries": [{"id": "x"}]})"), std::invalid_argument);
  EXPECT_THROW(Catalogue::parse(R"({"version": 1, "entries": [{"id": "x", "matrix": [[1, 2], [3]]}]})"),
               std::invalid_argument);
  const auto ok = Catalogue::parse(R"({"version": 2, "entries": [{"id": "x", "matrix": [[1, 1]]}]})");
  EXPECT_EQ(ok.version(), 2);
  EXPECT_EQ(ok.entries().size(), 1u);
}

TEST(Catalogue, CataloguedExampleInstance) {
  const auto f = catalogued_example("ex4_5");
  EXPECT_EQ(f.config.cols(), 5u);
  EXPECT_FALSE(f.expected.empty());
}
