#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "toricsplit/exactla.hpp"
#include "toricsplit/lattice.hpp"

using namespace toricsplit;

TEST(Lattice, CheckedArithmeticThrowsOnOverflow) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_THROW(checked_add(big, 1), OverflowError);
  EXPECT_THROW(checked_sub(-big - 1, 1), OverflowError);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), OverflowError);
  EXPECT_THROW(LatticeVector({big, 1}) + LatticeVector({1, 0}), OverflowError);
}

TEST(Lattice, SignAndSupport) {
  const LatticeVector u{0, -4, 6, 0, 2};
  EXPECT_EQ(u.primitive(), LatticeVector({0, -2, 3, 0, 1}));
  EXPECT_EQ(u.canonical_sign(), LatticeVector({0, 4, -6, 0, -2}));
  EXPECT_EQ(u.plus_support(), SupportSet({2, 4}));
  EXPECT_EQ(u.minus_support(), SupportSet({1}));
  EXPECT_EQ(u.l1_norm(), 12);
  EXPECT_EQ(u.max_abs(), 6);
  EXPECT_TRUE(LatticeVector({0, -1, 2, 0, 0}).conformal_le(u));
  EXPECT_FALSE(LatticeVector({0, 1, 0, 0, 0}).conformal_le(u));
  EXPECT_FALSE(u.sign_compatible(LatticeVector({0, 1, 0, 0, 0})));
}

TEST(Lattice, CanonicalClassesIgnoreSign) {
  const std::vector<LatticeVector> a{{1, -1}, {-2, 1}, {-1, 1}};
  const std::vector<LatticeVector> b{{2, -1}, {1, -1}};
  EXPECT_EQ(canonical_classes(a), canonical_classes(b));
}

TEST(Lattice, SupportSetOps) {
  const SupportSet s{3, 1, 1};
  EXPECT_EQ(s.indices(), (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(SupportSet({1}).is_subset_of(s));
  EXPECT_FALSE(SupportSet({0, 2}).intersects(s));
}

TEST(ExactLinearAlgebra, RankMatchesEliminationOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + t % 4;
    const std::size_t c = 1 + (t / 4) % 6;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    EXPECT_EQ(rank(m), oracle::rank_q(m)) << m;
    EXPECT_EQ(rank(m) + rational_kernel_basis(m).size(), c);
  }
}

TEST(ExactLinearAlgebra, RationalKernelIsCanonical) {
  const IntMatrix m{{1, 1, 1, 1}, {0, 2, 3, 5}};
  const auto k = rational_kernel_basis(m);
  ASSERT_EQ(k.size(), 2u);
  for (const auto& v : k) {
    std::vector<std::int64_t> z;
    for (const auto& x : v) {
      ASSERT_EQ(x.get_den(), 1);
      z.push_back(x.get_num().get_si());
    }
    EXPECT_TRUE(m.annihilates(LatticeVector(z)));
  }
}

TEST(ExactLinearAlgebra, IntegerKernelGeneratesTheLattice) {
  // Every small kernel vector must be an integer combination of the basis;
  // with a unimodular completion that is the same as the basis being
  // saturated, which we test directly on box vectors.
  const IntMatrix m{{2, 1, 2, 0}, {3, 0, 2, 5}};
  const auto basis = integer_kernel_basis(m);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& b : basis) EXPECT_TRUE(m.annihilates(b));
  for (const auto& u : oracle::kernel_box(m, 6)) {
    // Solve u = x b0 + y b1 over Q; integrality is the claim.
    Rational det = Rational(basis[0][0]) * basis[1][1] - Rational(basis[0][1]) * basis[1][0];
    std::size_t i = 0;
    std::size_t j = 1;
    for (std::size_t a = 0; a < 4 && det == 0; ++a)
      for (std::size_t b = a + 1; b < 4 && det == 0; ++b) {
        det = Rational(basis[0][a]) * basis[1][b] - Rational(basis[0][b]) * basis[1][a];
        i = a;
        j = b;
      }
    ASSERT_NE(det, 0);
    const Rational x = (Rational(u[i]) * basis[1][j] - Rational(u[j]) * basis[1][i]) / det;
    const Rational y = (Rational(basis[0][i]) * u[j] - Rational(basis[0][j]) * u[i]) / det;
    EXPECT_EQ(x.get_den(), 1) << u;
    EXPECT_EQ(y.get_den(), 1) << u;
  }
}

TEST(ExactLinearAlgebra, SpanAndComplement) {
  const std::vector<LatticeVector> v{{1, -1, 0, 0}, {0, 1, -1, 0}, {1, 0, -1, 0}};
  EXPECT_EQ(span_dimension(v), 2u);
  const auto c = orthogonal_complement(v, 4);
  ASSERT_TRUE(std::holds_alternative<IntMatrix>(c));
  EXPECT_TRUE(kernel_equals_span(std::get<IntMatrix>(c), v));
  EXPECT_FALSE(kernel_equals_span(std::get<IntMatrix>(c), std::vector<LatticeVector>{v[0]}));
  const std::vector<LatticeVector> full{{1, 0}, {0, 1}};
  EXPECT_TRUE(std::holds_alternative<FullSpan>(orthogonal_complement(full, 2)));
}

TEST(ExactLinearAlgebra, SignedKernelVectorAgreesWithBox) {
  const IntMatrix m{{1, 1, 1, 1}, {0, 2, 3, 5}};
  const auto box = oracle::kernel_box(m, 5);
  for (std::size_t mask = 1; mask < 81; ++mask) {
    // Ternary digits: 0 absent, 1 plus, 2 minus.
    std::vector<std::size_t> plus, minus;
    std::size_t x = mask;
    for (std::size_t i = 0; i < 4; ++i, x /= 3) {
      if (x % 3 == 1) plus.push_back(i);
      if (x % 3 == 2) minus.push_back(i);
    }
    if (plus.empty() || minus.empty()) continue;
    const SupportSet p(plus), q(minus);
    const auto got = signed_kernel_vector(m, p, q);
    bool in_box = false;
    for (const auto& u : box)
      in_box = in_box || (u.plus_support() == p && u.minus_support() == q) ||
               (u.plus_support() == q && u.minus_support() == p);
    if (got) {
      EXPECT_TRUE(m.annihilates(*got));
      EXPECT_EQ(got->plus_support(), p);
      EXPECT_EQ(got->minus_support(), q);
    }
    if (in_box) EXPECT_TRUE(got.has_value());
  }
  EXPECT_THROW(signed_kernel_vector(m, SupportSet{0}, SupportSet{0, 1}), std::invalid_argument);
}

TEST(ExactLinearAlgebra, NonnegativeSolution) {
  // x + y = 1, x - y = 0 -> (1/2, 1/2); x + y = -1 has none.
  const std::vector<RatVector> a{{1, 1}, {1, -1}};
  const auto s = nonnegative_solution(a, {1, 0});
  ASSERT_TRUE(s);
  EXPECT_EQ((*s)[0], Rational(1, 2));
  EXPECT_FALSE(nonnegative_solution(a, {-1, 0}));
}

TEST(ExactLinearAlgebra, ClearDenominators) {
  const auto z = clear_denominators({Rational(1, 2), Rational(-3, 4), 0});
  EXPECT_EQ(z, (std::vector<Integer>{2, -3, 0}));
  EXPECT_THROW(to_int64(Integer("100000000000000000000")), OverflowError);
}
