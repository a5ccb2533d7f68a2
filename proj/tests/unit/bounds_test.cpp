#include <gtest/gtest.h>

#include <cmath>

#include "ksec/bounds.hpp"
#include "ksec/error.hpp"
#include "ksec/instances.hpp"
#include "oracles.hpp"

namespace ksec {
namespace {

TEST(Bounds, TreeBoundExactAtTheEdge) {
  // (2 + 16 * 10 / 5) * 2 = 68
  EXPECT_DOUBLE_EQ(static_cast<double>(bound_tree(10, 2, 5, 2)), 68.0);
  EXPECT_TRUE(within_bound_tree(68, 10, 2, 5, 2));
  EXPECT_FALSE(within_bound_tree(69, 10, 2, 5, 2));
  EXPECT_THROW(bound_tree(10, 2, 0, 2), Error);
}

TEST(Bounds, LogBoundExactForPowersOfTwo) {
  // n / diam = 4: (4 + 18 + 18) * (k-1) Delta / 2 = 40 for k = 2, Delta = 2.
  const LogBound b = bound_tree_improved(8, 2, 2, 2);
  EXPECT_DOUBLE_EQ(static_cast<double>(b.value()), 40.0);
  EXPECT_TRUE(b.holds(40));
  EXPECT_FALSE(b.holds(41));
  // q = 1: log term vanishes.
  const LogBound one = diam_cut_log_bound(Rational(1), 3);
  EXPECT_TRUE(one.holds(27));
  EXPECT_FALSE(one.holds(28));
}

TEST(Bounds, LogBoundFloatingAgreesWithFloor) {
  for (int n = 3; n < 200; n += 7) {
    const LogBound b = bound_tree_improved(n, 3, 3, 4);
    const auto f = static_cast<std::int64_t>(std::floor(b.value()));
    EXPECT_TRUE(b.holds(f));
    EXPECT_FALSE(b.holds(f + 1));
  }
}

TEST(Bounds, TdBoundForPathDecomposition) {
  // r = 1, t = 2, k = 2: 24 Delta.
  for (int delta = 1; delta <= 4; ++delta) {
    const LogBound b = bound_td(2, 2, delta, Rational(1));
    EXPECT_DOUBLE_EQ(static_cast<double>(b.value()), 24.0 * delta);
  }
}

TEST(Bounds, DiamCutBoundExact) {
  // d = 3/4, Delta = 3: (2 + 64/3) * 3 = 70.
  EXPECT_TRUE(within_diam_cut_bound(70, Rational(3, 4), 3));
  EXPECT_FALSE(within_diam_cut_bound(71, Rational(3, 4), 3));
  EXPECT_TRUE(within_diam_cut_bound(140, Rational(3, 4), 3, 2));
  EXPECT_NEAR(static_cast<double>(diam_cut_bound(Rational(3, 4), 3)), 70.0, 1e-9);
  // 8/d * Delta with d = 1/2, Delta = 3: 48.
  EXPECT_TRUE(within_exact_cut_bound(48, Rational(1, 2), 3));
  EXPECT_FALSE(within_exact_cut_bound(49, Rational(1, 2), 3));
}

TEST(Bounds, AdversarialConstant) {
  // diam >= n/2 and Delta = 4 give at most 3 (2 + 32) 4 = 408 for k = 4.
  for (int h = 1; h <= 6; ++h) {
    GeneratorSpec s;
    s.family = Family::kAdversarialTernaryPath;
    s.height = h;
    const Graph g = generate(s).graph;
    const int diam = testing::bfs_diameter(g);
    EXPECT_GE(2 * diam, g.num_vertices());
    EXPECT_LE(bound_tree(g.num_vertices(), 4, diam, max_degree(g)), 408.0L);
  }
}

TEST(BoundsProperty, TreeBoundStrongerThanWidthOneTdBound) {
  Rng rng(71);
  for (int it = 0; it < 500; ++it) {
    const int n = rng.uniform_int(2, 3000);
    const int diam = rng.uniform_int(1, n - 1);
    const int k = rng.uniform_int(2, 8);
    const int delta = rng.uniform_int(1, 6);
    const LogBound tree = bound_tree_improved(n, k, diam, delta);
    const LogBound td = bound_td(k, 2, delta, Rational(diam + 1, n));
    EXPECT_LE(tree.value(), td.value());
  }
}

}  // namespace
}  // namespace ksec
