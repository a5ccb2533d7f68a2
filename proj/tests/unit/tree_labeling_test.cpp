#include <gtest/gtest.h>

#include <algorithm>

#include "ksec/error.hpp"
#include "ksec/tree_labeling.hpp"
#include "oracles.hpp"

namespace ksec {
namespace {

using P = std::pair<Vertex, Vertex>;

Graph path_graph(int n) {
  std::vector<P> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph star3() { return Graph::from_edges(4, std::vector<P>{{1, 2}, {1, 3}, {1, 4}}); }

TEST(PathDecomposition, Examples) {
  const auto p5 = decompose_along_path(path_graph(5), std::vector<Vertex>{1, 2, 3, 4, 5});
  for (const auto& s : p5.subtree_members) EXPECT_EQ(s.size(), 1u);

  const auto st = decompose_along_path(star3(), std::vector<Vertex>{2, 1, 3});
  EXPECT_EQ(st.subtree_of(1), (VertexSet{1, 4}));
  EXPECT_EQ(st.path_vertex_of[4], 1);

  // Spine 1-2-3-4, leg i+4 on spine vertex i.
  const Graph cat = Graph::from_edges(
      8, std::vector<P>{{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 8}});
  const auto cd = decompose_along_path(cat, std::vector<Vertex>{1, 2, 3, 4});
  for (const auto& s : cd.subtree_members) EXPECT_EQ(s.size(), 2u);

  EXPECT_THROW(decompose_along_path(path_graph(4), std::vector<Vertex>{1, 3}), Error);
  EXPECT_THROW(decompose_along_path(path_graph(4), std::vector<Vertex>{}), Error);
}

TEST(PLabeling, PathLabelsFollowThePath) {
  const PLabeling lab = p_labeling(path_graph(9));
  const auto& path = lab.decomposition.path;
  for (std::size_t i = 0; i < path.size(); ++i) {
    EXPECT_EQ(lab.label_of(path[i]), static_cast<Label>(i + 1));
  }
  EXPECT_EQ(lab.d_p(4, 4), 0);
  for (Label x = 1; x <= 9; ++x) {
    for (Label y = x; y <= 9; ++y) EXPECT_EQ(lab.d_p(x, y), y - x);
  }
}

TEST(PLabeling, StarBlock) {
  const PLabeling lab =
      p_labeling(star3(), decompose_along_path(star3(), std::vector<Vertex>{2, 1, 3}));
  EXPECT_EQ(lab.label_of(2), 1);
  EXPECT_EQ(lab.label_of(4), 2);
  EXPECT_EQ(lab.label_of(1), 3);
  EXPECT_EQ(lab.label_of(3), 4);
}

TEST(CyclicLabeling, BetweenIsCyclic) {
  std::vector<Vertex> vl(11);
  for (int i = 0; i <= 10; ++i) vl[i] = i;
  const CyclicLabeling lab(vl, std::vector<char>(11, 1));
  const auto a = lab.interval(1, 7);
  EXPECT_NE(std::find(a.begin(), a.end(), 5), a.end());
  const auto b = lab.interval(8, 3);
  EXPECT_NE(std::find(b.begin(), b.end(), 9), b.end());
  EXPECT_EQ(std::find(b.begin(), b.end(), 5), b.end());
  EXPECT_EQ(lab.distance(8, 3), 5);
}

TEST(FindAnchor, PathReturnsLabelOne) {
  const PLabeling lab = p_labeling(path_graph(12));
  for (int m = 1; m < 12; ++m) EXPECT_EQ(find_anchor(lab, m), 1);
}

TEST(FindAnchor, StarAnchor) {
  const PLabeling lab =
      p_labeling(star3(), decompose_along_path(star3(), std::vector<Vertex>{2, 1, 3}));
  const Label v = find_anchor(lab, 2);
  EXPECT_EQ(lab.d_p(v, v + 2), 1);
  EXPECT_TRUE(lab.on_path(v) || lab.on_path(v + 2));
}

TEST(PLabelingProperty, StructuralInvariants) {
  Rng rng(21);
  for (int it = 0; it < 1000; ++it) {
    const int n = rng.uniform_int(1, 60);
    const Graph t = testing::random_tree(rng, n, rng.uniform_int(2, 6));
    const PLabeling lab = p_labeling(t);
    const auto& dec = lab.decomposition;
    // Bijection.
    std::vector<int> hit(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
      ASSERT_EQ(lab.vertex_of(lab.label_of(v)), v);
      ++hit[lab.label_of(v)];
    }
    for (Label l = 1; l <= n; ++l) ASSERT_EQ(hit[l], 1);
    // Consecutive blocks, path vertex is the block maximum, order along P.
    Label prev_max = 0;
    for (std::size_t h = 0; h < dec.path.size(); ++h) {
      const Vertex z = dec.path[h];
      Label lo = n + 1, hi = 0;
      for (Vertex x : dec.subtree_members[h]) {
        lo = std::min(lo, lab.label_of(x));
        hi = std::max(hi, lab.label_of(x));
      }
      ASSERT_EQ(hi - lo + 1, static_cast<int>(dec.subtree_members[h].size()));
      ASSERT_EQ(hi, lab.label_of(z));
      ASSERT_GT(hi, prev_max);
      ASSERT_EQ(lo, prev_max + 1);
      prev_max = hi;
      // The label after a path vertex lies in the next subtree.
      if (h + 1 < dec.path.size()) {
        ASSERT_EQ(dec.path_vertex_of[lab.vertex_of(lab.label_of(z) + 1)],
                  dec.path[h + 1]);
      }
    }
  }
}

TEST(PLabelingProperty, DistanceMatchesScanAndIsContinuous) {
  Rng rng(22);
  for (int it = 0; it < 500; ++it) {
    const int n = rng.uniform_int(2, it < 100 ? 200 : 40);
    const Graph t = testing::random_tree(rng, n, rng.uniform_int(2, 5));
    const PLabeling lab = p_labeling(t);
    for (int q = 0; q < 60; ++q) {
      const Label x = rng.uniform_int(1, n), y = rng.uniform_int(1, n);
      ASSERT_EQ(lab.d_p(x, y), testing::naive_distance(lab.labels, x, y));
      ASSERT_LE(std::abs(lab.d_p(x, y) - lab.d_p(x + 1, y + 1)), 1);
    }
  }
}

TEST(FindAnchorProperty, SmallestQualifyingLabel) {
  Rng rng(23);
  for (int it = 0; it < 300; ++it) {
    const int n = it == 0 ? 50 : rng.uniform_int(2, 80);
    const Graph t = testing::random_tree(rng, n, 4);
    const PLabeling lab = p_labeling(t);
    const Rational d(static_cast<std::int64_t>(lab.decomposition.path.size()), n);
    const int m = it == 0 ? 20 : rng.uniform_int(1, n - 1);
    Label expected = 0;
    for (Label v = 1; v <= n && expected == 0; ++v) {
      if (testing::naive_distance(lab.labels, v, v + m) == d.floor_times(m) &&
          (lab.on_path(v) || lab.on_path(v + m))) {
        expected = v;
      }
    }
    ASSERT_NE(expected, 0) << "no anchor exists";
    EXPECT_EQ(find_anchor(lab, m), expected);
  }
}

}  // namespace
}  // namespace ksec
