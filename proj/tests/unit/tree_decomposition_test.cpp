#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ksec/error.hpp"
#include "ksec/tree_decomposition.hpp"
#include "oracles.hpp"

namespace ksec {
namespace {

using P = std::pair<Vertex, Vertex>;

Graph p4() { return Graph::from_edges(4, std::vector<P>{{1, 2}, {2, 3}, {3, 4}}); }

TreeDecomposition p4_td() {
  return TreeDecomposition(4, {{1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}});
}

TEST(Validate, Examples) {
  const TreeDecomposition one(4, {{1, 2, 3, 4}}, {});
  EXPECT_TRUE(validate(one, p4()).ok());
  EXPECT_EQ(one.width(), 3);
  EXPECT_TRUE(validate(p4_td(), p4()).ok());
  EXPECT_EQ(p4_td().width(), 1);

  const TreeDecomposition no23(4, {{1, 2}, {2}, {3, 4}}, {{0, 1}, {1, 2}});
  const TdValidation v = validate(no23, p4());
  EXPECT_EQ(v.failed, TdCondition::kT2);
  EXPECT_EQ(v.witness, (std::vector<int>{2, 3}));

  const TreeDecomposition missing(4, {{1, 2}, {2, 3}, {3}}, {{0, 1}, {1, 2}});
  EXPECT_EQ(validate(missing, p4()).failed, TdCondition::kT1);

  const TreeDecomposition broken(4, {{1, 2}, {3, 4}, {2, 3}}, {{0, 1}, {1, 2}});
  const TdValidation b = validate(broken, p4());
  EXPECT_EQ(b.failed, TdCondition::kT3);
  EXPECT_EQ(b.witness.front(), 2);

  const TreeDecomposition not_tree(4, {{1, 2}, {2, 3}, {3, 4}}, {{0, 1}});
  EXPECT_EQ(validate(not_tree, p4()).failed, TdCondition::kTreeShape);
}

TEST(Induced, Examples) {
  EXPECT_EQ(induced(p4_td(), VertexSet{1, 2, 3, 4}), p4_td());
  const auto empty = induced(p4_td(), VertexSet{});
  for (const auto& c : empty.clusters()) EXPECT_TRUE(c.empty());
  const auto sub = induced(p4_td(), VertexSet{1, 2});
  EXPECT_EQ(sub.clusters(), (std::vector<VertexSet>{{1, 2}, {2}, {}}));
  EXPECT_EQ(sub.tree_edges(), p4_td().tree_edges());
}

TEST(MakeNonredundant, Examples) {
  EXPECT_EQ(make_nonredundant(p4_td()), p4_td());
  const TreeDecomposition chain(3, {{1, 2}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}});
  const auto nr = make_nonredundant(chain);
  EXPECT_EQ(nr.num_nodes(), 2);
  EXPECT_EQ(nr.clusters(), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
  EXPECT_TRUE(is_nonredundant(nr));
}

TEST(HeaviestPath, PathShapedTree) {
  const auto hp = heaviest_path(p4_td(), 4);
  EXPECT_EQ(hp.weight, 4);
  EXPECT_EQ(hp.relative_weight, Rational(1));
  EXPECT_EQ(hp.path.size(), 3u);
}

TEST(ClusterIncidentEdges, Examples) {
  const TreeDecomposition with_empty(4, {{1, 2}, {}, {2, 3, 4}}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(cluster_incident_edges(with_empty, p4(), 1).empty());
  const TreeDecomposition one(4, {{1, 2, 3, 4}}, {});
  EXPECT_EQ(cluster_incident_edges(one, p4(), 0).size(), 3u);
  const TreeDecomposition three(4, {{1, 2}, {2, 3}, {3, 4}}, {{0, 1}, {1, 2}});
  EXPECT_EQ(cluster_incident_edges(three, p4(), 1),
            (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
}

TEST(RemoveClusterParts, Examples) {
  const TreeDecomposition one(4, {{1, 2, 3, 4}}, {});
  EXPECT_EQ(remove_cluster_parts(one, 0),
            (std::vector<VertexSet>{{1}, {2}, {3}, {4}}));
  // Leaf node whose cluster sits inside its neighbour's.
  const TreeDecomposition leaf(4, {{2}, {1, 2}, {2, 3}, {3, 4}},
                               {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(remove_cluster_parts(leaf, 0),
            (std::vector<VertexSet>{{2}, {1, 3, 4}}));
}

TEST(TreeDecompositionProperty, ValidateMatchesNaive) {
  Rng rng(41);
  for (int it = 0; it < 300; ++it) {
    auto inst = testing::random_partial_ktree(rng, rng.uniform_int(2, 20),
                                              rng.uniform_int(2, 4), it % 2 == 0);
    // Corrupt about half of them by dropping a vertex from a random cluster.
    std::vector<VertexSet> clusters = inst.td.clusters();
    if (it % 2 == 1) {
      auto& c = clusters[rng.below(clusters.size())];
      if (!c.empty()) c.erase(c.begin() + static_cast<long>(rng.below(c.size())));
    }
    const TreeDecomposition td(inst.td.num_vertices(), clusters, inst.td.tree_edges());
    ASSERT_LE(td.num_nodes(), 30);
    EXPECT_EQ(validate(td, inst.graph).ok(), testing::naive_validate(td, inst.graph));
  }
}

TEST(TreeDecompositionProperty, InducedStaysValidAndSmaller) {
  Rng rng(42);
  for (int it = 0; it < 200; ++it) {
    const auto inst = testing::random_partial_ktree(rng, rng.uniform_int(3, 40), 3, true);
    VertexSet keep;
    for (Vertex v = 1; v <= inst.graph.num_vertices(); ++v) {
      if (rng.below(3) != 0) keep.push_back(v);
    }
    const InducedSubgraph sub = induced_subgraph(inst.graph, keep);
    const TreeDecomposition r = restrict_to(inst.td, sub);
    EXPECT_TRUE(validate(r, sub.graph).ok());
    EXPECT_LE(r.max_cluster_size(), inst.td.max_cluster_size());
    EXPECT_LE(r.size(), inst.td.size());
  }
}

TEST(TreeDecompositionProperty, MakeNonredundantPostconditions) {
  Rng rng(43);
  for (int it = 0; it < 200; ++it) {
    const auto inst = testing::random_partial_ktree(rng, rng.uniform_int(2, 50),
                                                    rng.uniform_int(2, 4), true);
    const int n = inst.graph.num_vertices();
    const TreeDecomposition nr = make_nonredundant(inst.td);
    EXPECT_TRUE(is_nonredundant(nr));
    EXPECT_TRUE(validate(nr, inst.graph).ok());
    EXPECT_EQ(nr.width(), inst.td.width());
    EXPECT_LE(nr.size(), inst.td.size());
    EXPECT_GE(relative_heaviest_weight(nr, n), relative_heaviest_weight(inst.td, n));
  }
}

TEST(TreeDecompositionProperty, HeaviestPathMatchesBruteForce) {
  Rng rng(44);
  for (int it = 0; it < 300; ++it) {
    const auto inst = testing::random_partial_ktree(rng, rng.uniform_int(2, 25),
                                                    rng.uniform_int(2, 4), it % 3 == 0);
    const int n = inst.graph.num_vertices();
    const auto hp = heaviest_path(inst.td, n);
    const int brute = testing::brute_heaviest_weight(inst.td);
    EXPECT_EQ(hp.weight, brute);
    EXPECT_EQ(heaviest_path_weight(inst.td), brute);
    EXPECT_EQ(hp.relative_weight, Rational(brute, n));
    // The returned node sequence is a tree path of that weight.
    ASSERT_FALSE(hp.path.empty());
    EXPECT_EQ(testing::tree_path(inst.td, hp.path.front(), hp.path.back()), hp.path);
    std::set<Vertex> u;
    for (NodeId i : hp.path) u.insert(inst.td.cluster(i).begin(), inst.td.cluster(i).end());
    EXPECT_EQ(static_cast<int>(u.size()), brute);
  }
}

TEST(TreeDecompositionProperty, HeaviestPathBeatsSampledPaths) {
  Rng rng(45);
  const auto inst = testing::random_partial_ktree(rng, 300, 3, true);
  const int best = heaviest_path_weight(inst.td);
  for (int s = 0; s < 1000; ++s) {
    const auto i = static_cast<NodeId>(rng.below(inst.td.num_nodes()));
    const auto j = static_cast<NodeId>(rng.below(inst.td.num_nodes()));
    std::set<Vertex> u;
    for (NodeId h : testing::tree_path(inst.td, i, j)) {
      u.insert(inst.td.cluster(h).begin(), inst.td.cluster(h).end());
    }
    ASSERT_LE(static_cast<int>(u.size()), best);
  }
}

TEST(TreeDecompositionProperty, WidthOneTdOfTreeCoversLongestPath) {
  Rng rng(46);
  for (int it = 0; it < 100; ++it) {
    const int n = rng.uniform_int(1, 80);
    const Graph t = testing::random_tree(rng, n, 5);
    const TreeDecomposition td = tree_decomposition_of_tree(t);
    ASSERT_TRUE(validate(td, t).ok());
    EXPECT_LE(td.width(), 1);
    EXPECT_GE(relative_heaviest_weight(td, n),
              Rational(testing::bfs_diameter(t) + 1, n));
  }
}

TEST(TreeDecompositionProperty, RemoveClusterPartsSeparates) {
  Rng rng(47);
  for (int it = 0; it < 150; ++it) {
    const auto inst = testing::random_partial_ktree(rng, rng.uniform_int(2, 40),
                                                    rng.uniform_int(2, 4), it % 2 == 0);
    const Graph& g = inst.graph;
    for (NodeId i = 0; i < inst.td.num_nodes(); ++i) {
      const auto parts = remove_cluster_parts(inst.td, i);
      ASSERT_EQ(parts.size(), inst.td.tree_neighbors(i).size() + inst.td.cluster(i).size());
      ASSERT_TRUE(testing::is_partition(parts, g.num_vertices()));
      const auto incident = cluster_incident_edges(inst.td, g, i);
      ASSERT_LE(static_cast<int>(incident.size()),
                inst.td.max_cluster_size() * max_degree(g));
      std::vector<std::size_t> owner(static_cast<std::size_t>(g.num_vertices()) + 1);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        for (Vertex v : parts[p]) owner[v] = p;
      }
      const auto& c = inst.td.cluster(i);
      for (const Edge& e : g.edges()) {
        const bool touches = std::binary_search(c.begin(), c.end(), e.u) ||
                             std::binary_search(c.begin(), c.end(), e.v);
        const bool listed = std::find(incident.begin(), incident.end(), e) != incident.end();
        ASSERT_EQ(touches, listed);
        if (!touches) ASSERT_EQ(owner[e.u], owner[e.v]);
      }
    }
  }
}

TEST(JoinDecompositions, ShiftsSecondTree) {
  const TreeDecomposition a(3, {{1}, {1, 2}}, {{0, 1}});
  const TreeDecomposition b(3, {{3}}, {});
  const auto j = join_decompositions(a, b, 1, 0);
  EXPECT_EQ(j.num_nodes(), 3);
  EXPECT_TRUE(j.tree_is_tree());
  EXPECT_EQ(j.cluster(2), (VertexSet{3}));
  EXPECT_EQ(j.tree_edges().back(), (std::pair<NodeId, NodeId>{1, 2}));
}

}  // namespace
}  // namespace ksec
