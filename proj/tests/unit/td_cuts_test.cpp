#include <gtest/gtest.h>

#include <algorithm>
#include <array>

#include "ksec/bounds.hpp"
#include "ksec/error.hpp"
#include "ksec/instances.hpp"
#include "ksec/td_cuts.hpp"
#include "oracles.hpp"

namespace ksec {
namespace {

using P = std::pair<Vertex, Vertex>;

struct PathInstance {
  Graph graph;
  TreeDecomposition td;
};

PathInstance path_with_path_td(int n) {
  std::vector<P> e;
  std::vector<VertexSet> clusters;
  std::vector<std::pair<NodeId, NodeId>> tree;
  for (Vertex v = 1; v < n; ++v) {
    e.emplace_back(v, v + 1);
    clusters.push_back({v, v + 1});
    if (v > 1) tree.emplace_back(v - 2, v - 1);
  }
  return {Graph::from_edges(n, e), TreeDecomposition(n, clusters, tree)};
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

TEST(TdPLabeling, PathDecompositionOfP4) {
  const auto inst = path_with_path_td(4);
  const std::vector<NodeId> path{0, 1, 2};
  const TDPLabeling lab = td_p_labeling(inst.td, path);
  EXPECT_EQ(lab.r_sets, (std::vector<VertexSet>{{1, 2}, {3}, {4}}));
  for (const auto& s : lab.s_sets) EXPECT_TRUE(s.empty());
  EXPECT_EQ(lab.r_size(), 4);
  for (Vertex v = 1; v <= 4; ++v) EXPECT_EQ(lab.labels.label_of(v), v);
}

TEST(TdPLabeling, SingleNode) {
  const TreeDecomposition td(3, {{1, 2, 3}}, {});
  const TDPLabeling lab = td_p_labeling(td, std::vector<NodeId>{0});
  EXPECT_EQ(lab.r_sets, (std::vector<VertexSet>{{1, 2, 3}}));
  EXPECT_TRUE(lab.s_sets[0].empty());
}

TEST(TdPLabeling, RejectsRedundantPath) {
  const TreeDecomposition td(3, {{1, 2}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}});
  EXPECT_THROW(td_p_labeling(td, std::vector<NodeId>{0, 1, 2}), Error);
}

// Replays the definitions of R_i, S_i and the label layout.
void check_labeling(const Graph& g, const TreeDecomposition& td,
                    const TDPLabeling& lab) {
  const int n = g.num_vertices();
  const auto& path = lab.path;
  VertexSet r_all;
  for (NodeId i : path) r_all.insert(r_all.end(), td.cluster(i).begin(), td.cluster(i).end());
  std::sort(r_all.begin(), r_all.end());
  r_all.erase(std::unique(r_all.begin(), r_all.end()), r_all.end());
  ASSERT_EQ(lab.r_size(), static_cast<int>(r_all.size()));
  std::vector<int> r_owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t h = 0; h < path.size(); ++h) {
    ASSERT_FALSE(lab.r_sets[h].empty());
    for (Vertex x : lab.r_sets[h]) {
      ASSERT_EQ(r_owner[x], -1);
      r_owner[x] = static_cast<int>(h);
      // Closest path node to i_0 containing x.
      std::size_t first = path.size();
      for (std::size_t q = 0; q < path.size() && first == path.size(); ++q) {
        if (contains(td.cluster(path[q]), x)) first = q;
      }
      ASSERT_EQ(first, h);
    }
  }
  for (Vertex x : r_all) ASSERT_GE(r_owner[x], 0);
  std::vector<int> s_owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t h = 0; h < path.size(); ++h) {
    for (Vertex x : lab.s_sets[h]) {
      ASSERT_EQ(r_owner[x], -1);
      ASSERT_EQ(s_owner[x], -1);
      s_owner[x] = static_cast<int>(h);
    }
  }
  for (Vertex x = 1; x <= n; ++x) ASSERT_TRUE(r_owner[x] >= 0 || s_owner[x] >= 0);
  // Blocks: S_h then R_h, consecutive, in path order.
  Label next = 1;
  for (std::size_t h = 0; h < path.size(); ++h) {
    Label lo = n + 1, hi = 0;
    Label r_lo = n + 1, s_hi = 0;
    for (Vertex x : lab.s_sets[h]) {
      lo = std::min(lo, lab.labels.label_of(x));
      hi = std::max(hi, lab.labels.label_of(x));
      s_hi = std::max(s_hi, lab.labels.label_of(x));
    }
    for (Vertex x : lab.r_sets[h]) {
      lo = std::min(lo, lab.labels.label_of(x));
      hi = std::max(hi, lab.labels.label_of(x));
      r_lo = std::min(r_lo, lab.labels.label_of(x));
      ASSERT_TRUE(lab.in_r(x));
    }
    ASSERT_EQ(lo, next);
    ASSERT_EQ(hi - lo + 1,
              static_cast<int>(lab.s_sets[h].size() + lab.r_sets[h].size()));
    ASSERT_LT(s_hi, r_lo);
    next = hi + 1;
  }
  ASSERT_EQ(next, n + 1);

  // Deleting E_G(i) leaves no edge between R_i, S_i, the labels before the
  // block and the labels after it.
  for (std::size_t h = 0; h < path.size(); ++h) {
    const auto& c = td.cluster(path[h]);
    Label lo = n + 1, hi = 0;
    for (const auto* set : {&lab.s_sets[h], &lab.r_sets[h]}) {
      for (Vertex x : *set) {
        lo = std::min(lo, lab.labels.label_of(x));
        hi = std::max(hi, lab.labels.label_of(x));
      }
    }
    auto group = [&](Vertex x) {
      if (r_owner[x] == static_cast<int>(h)) return 1;
      if (s_owner[x] == static_cast<int>(h)) return 2;
      return lab.labels.label_of(x) < lo ? 3 : 4;
    };
    for (const Edge& e : g.edges()) {
      if (contains(c, e.u) || contains(c, e.v)) continue;
      ASSERT_NE(group(e.u), 1);
      ASSERT_EQ(group(e.u), group(e.v)) << "edge " << e.u << "-" << e.v;
    }
  }
}

TEST(TdPLabelingProperty, DefinitionReplay) {
  Rng rng(51);
  for (int it = 0; it < 200; ++it) {
    const int n = it == 0 ? 40 : rng.uniform_int(2, 60);
    const auto inst = testing::random_partial_ktree(rng, n, rng.uniform_int(2, 4), it % 2 == 0);
    const TreeDecomposition nr = make_nonredundant(inst.td);
    const auto hp = heaviest_path(nr, n);
    const TDPLabeling lab = td_p_labeling(nr, hp.path);
    check_labeling(inst.graph, nr, lab);
    if (::testing::Test::HasFatalFailure()) FAIL() << "iteration " << it;
    for (int q = 0; q < 20; ++q) {
      const Label x = rng.uniform_int(1, n), y = rng.uniform_int(1, n);
      ASSERT_EQ(lab.d_r(x, y), testing::naive_distance(lab.labels, x, y));
    }
    if (n >= 2) {
      const int m = rng.uniform_int(1, n - 1);
      const Label v = find_anchor(lab, m);
      ASSERT_EQ(lab.d_r(v, v + m), Rational(lab.r_size(), n).floor_times(m));
      ASSERT_TRUE(lab.labels.marked(v) || lab.labels.marked(v + m));
    }
  }
}

TEST(TdPLabeling, RIsCyclicDistanceOnPaths) {
  const auto inst = path_with_path_td(9);
  const TDPLabeling lab = td_p_labeling(inst.td, heaviest_path(inst.td, 9).path);
  EXPECT_EQ(lab.d_r(3, 3), 0);
  EXPECT_EQ(lab.d_r(2, 7), 5);
  EXPECT_EQ(lab.d_r(7, 2), 4);
}

void expect_td_approx(const Graph& g, const TreeDecomposition& td, int m, const Cut& c) {
  const int b = static_cast<int>(c.black.size());
  ASSERT_LE(m, 2 * b) << "m=" << m;
  ASSERT_LE(b, m);
  ASSERT_LE(c.width, td.max_cluster_size() * max_degree(g));
  ASSERT_EQ(c.width, boundary_width(g, c.black));
}

TEST(ApproximateCutTd, Examples) {
  Rng rng(52);
  const Graph t = testing::random_tree(rng, 30, 4);
  const TreeDecomposition td = tree_decomposition_of_tree(t);
  const Cut c = approximate_cut_td(t, td, 4);
  expect_td_approx(t, td, 4, c);
  EXPECT_LE(c.width, 2 * max_degree(t));

  const auto p = path_with_path_td(6);
  const TreeDecomposition one(6, {{1, 2, 3, 4, 5, 6}}, {});
  for (int m = 1; m <= 12; ++m) expect_td_approx(p.graph, one, m, approximate_cut_td(p.graph, one, m));
  EXPECT_THROW(approximate_cut_td(p.graph, one, 0), Error);
  EXPECT_THROW(approximate_cut_td(p.graph, one, 13), Error);
}

TEST(ApproximateCutTdProperty, AllM) {
  Rng rng(53);
  for (int it = 0; it < 60; ++it) {
    const int n = it == 0 ? 30 : rng.uniform_int(1, 40);
    const auto inst = testing::random_partial_ktree(rng, n, rng.uniform_int(2, 4), it % 2 == 0);
    for (int m = 1; m <= 2 * n; ++m) {
      expect_td_approx(inst.graph, inst.td, m, approximate_cut_td(inst.graph, inst.td, m));
    }
  }
}

TEST(ExactCutBoundedTd, PathBoundIsFourTDelta) {
  const auto p = path_with_path_td(12);
  const LogBound b = td_exact_cut_bound(Rational(1), 2, 2);
  EXPECT_DOUBLE_EQ(static_cast<double>(b.value()), 4.0 * 2 * 2);
  for (int m = 1; m <= 12; ++m) {
    const Cut c = exact_cut_bounded_td(p.graph, p.td, m);
    EXPECT_EQ(c.width, m == 12 ? 0 : 1);
    EXPECT_TRUE(b.holds(c.width));
  }
}

TEST(ExactCutBoundedTdProperty, OptimalAndWithinBound) {
  Rng rng(54);
  for (int it = 0; it < 30; ++it) {
    const int n = it == 0 ? 20 : rng.uniform_int(2, 18);
    const auto inst = testing::random_partial_ktree(rng, n, rng.uniform_int(2, 4), it % 2 == 0);
    const TreeDecomposition nr = make_nonredundant(inst.td);
    const Rational r = relative_heaviest_weight(nr, n);
    for (int m = 1; m <= n; ++m) {
      const Cut c = exact_cut_bounded_td(inst.graph, inst.td, m);
      ASSERT_EQ(static_cast<int>(c.black.size()), m);
      ASSERT_EQ(c.width, testing::brute_min_cut(inst.graph, m));
      ASSERT_TRUE(td_exact_cut_bound(r, nr.max_cluster_size(), max_degree(inst.graph))
                      .holds(c.width));
    }
  }
}

void check_r_cut(const Graph& g, const TreeDecomposition& td, int m, const RCut& rc) {
  const int n = g.num_vertices();
  const TreeDecomposition nr = make_nonredundant(td);
  const Rational r = relative_heaviest_weight(nr, n);
  const int t = nr.max_cluster_size();
  const Cut& c = rc.cut;
  ASSERT_EQ(static_cast<int>(c.black.size()), m);
  ASSERT_EQ(c.width, boundary_width(g, c.black));
  ASSERT_EQ(rc.trace.r, r);
  ASSERT_EQ(rc.trace.t, t);
  ASSERT_TRUE(r_cut_bound(r, t, max_degree(g)).holds(c.width));
  // Recompute r of the decomposition induced by G[W] from scratch.
  const InducedSubgraph white = induced_subgraph(g, c.white);
  const TreeDecomposition wtd = restrict_to(nr, white);
  ASSERT_TRUE(validate(wtd, white.graph).ok());
  const Rational r_white(testing::brute_heaviest_weight(wtd), n - m);
  ASSERT_GE(r_white, r);
  ASSERT_EQ(rc.trace.r_after, r_white);
  ASSERT_TRUE(validate(rc.white_td, white.graph).ok());
  ASSERT_EQ(relative_heaviest_weight(rc.white_td, n - m), r_white);
  const auto& tr = rc.trace;
  if (tr.case_tag == RCutCase::kCase2b || tr.case_tag == RCutCase::kCase3) {
    ASSERT_GE(tr.m_tilde, 2);
    ASSERT_LE(tr.m_tilde, 2 * m);
    const int vt = static_cast<int>(tr.v_tilde.size());
    ASSERT_LE(m, vt);
    ASSERT_LE(vt, 2 * m);
    ASSERT_TRUE(tr.glued_valid);
    ASSERT_LE(tr.glued_width, t - 1);
    ASSERT_TRUE(tr.glued_split_clean);
    ASSERT_GE(tr.glued_r * Rational(2), r);
    ASSERT_LE(tr.outer_width, 3 * t * max_degree(g));
    for (Vertex b : c.black) ASSERT_TRUE(contains(tr.v_tilde, b));
  } else {
    ASSERT_EQ(c.black, tr.m_set);
  }
}

TEST(RPreservingCut, PathWithPathDecomposition) {
  const auto p = path_with_path_td(15);
  for (int m = 1; m < 15; ++m) {
    const RCut rc = r_preserving_cut(p.graph, p.td, m);
    check_r_cut(p.graph, p.td, m, rc);
    EXPECT_LE(rc.cut.width, 2 * 2 * 2);
    EXPECT_EQ(rc.trace.r_after, Rational(1));
  }
  EXPECT_THROW(r_preserving_cut(p.graph, p.td, 0), Error);
  EXPECT_THROW(r_preserving_cut(p.graph, p.td, 15), Error);
}

TEST(RPreservingCut, TreeWithWidthOneDecomposition) {
  Rng rng(55);
  for (int it = 0; it < 100; ++it) {
    const int n = rng.uniform_int(2, 60);
    const Graph t = testing::random_tree(rng, n, 4);
    const TreeDecomposition td = tree_decomposition_of_tree(t);
    const int m = rng.uniform_int(1, n - 1);
    check_r_cut(t, td, m, r_preserving_cut(t, td, m));
    if (::testing::Test::HasFatalFailure()) FAIL() << "iteration " << it;
  }
}

TEST(RPreservingCut, PartialTwoTreeSixty) {
  Rng rng(56);
  const auto inst = testing::random_partial_ktree(rng, 60, 3, false);
  for (int m : {1, 20, 59}) {
    check_r_cut(inst.graph, inst.td, m, r_preserving_cut(inst.graph, inst.td, m));
  }
}

TEST(RPreservingCutProperty, RandomPartialKTrees) {
  Rng rng(57);
  std::array<int, 4> seen{};
  for (int it = 0; it < 400; ++it) {
    const int n = rng.uniform_int(2, 80);
    const auto inst = testing::random_partial_ktree(rng, n, rng.uniform_int(2, 4), it % 2 == 0);
    const int m = rng.uniform_int(1, n - 1);
    const RCut rc = r_preserving_cut(inst.graph, inst.td, m);
    ++seen[static_cast<std::size_t>(rc.trace.case_tag)];
    check_r_cut(inst.graph, inst.td, m, rc);
    if (::testing::Test::HasFatalFailure()) FAIL() << "iteration " << it;
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    EXPECT_GT(seen[c], 0) << to_string(static_cast<RCutCase>(c));
  }
}

}  // namespace
}  // namespace ksec
