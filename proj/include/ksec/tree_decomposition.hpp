#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ksec/graph.hpp"
#include "ksec/rational.hpp"

namespace ksec {

/// Decomposition-tree nodes are 0-based indices.
using NodeId = std::int32_t;

/// A tree T with a cluster X^i of graph vertices on every node. Clusters may
/// be empty (induced decompositions usually have empty clusters). The vertex
/// universe is [1, num_vertices()].
class TreeDecomposition {
 public:
  TreeDecomposition() = default;

  /// Clusters are sorted and deduplicated. Throws kInvalidDecomposition on
  /// cluster vertices outside [1, num_vertices] or tree edges with endpoints
  /// outside [0, #nodes). Whether the edges form a tree is checked by
  /// `validate`, not here.
  TreeDecomposition(int num_vertices, std::vector<VertexSet> clusters,
                    std::vector<std::pair<NodeId, NodeId>> tree_edges);

  int num_vertices() const noexcept { return num_vertices_; }
  int num_nodes() const noexcept { return static_cast<int>(clusters_.size()); }

  const VertexSet& cluster(NodeId i) const { return clusters_[i]; }
  const std::vector<VertexSet>& clusters() const noexcept { return clusters_; }
  std::span<const NodeId> tree_neighbors(NodeId i) const { return adj_[i]; }
  const std::vector<std::pair<NodeId, NodeId>>& tree_edges() const noexcept {
    return edges_;
  }

  /// Largest cluster size, i.e. width + 1. This is the `t` of the width
  /// bounds.
  int max_cluster_size() const;
  int width() const { return max_cluster_size() - 1; }
  /// ||(T,X)|| = |V(T)| + sum |X^i|.
  std::int64_t size() const;

  /// Whether the node graph is a tree (connected, #edges = #nodes - 1).
  bool tree_is_tree() const;

  friend bool operator==(const TreeDecomposition& a,
                         const TreeDecomposition& b) {
    return a.num_vertices_ == b.num_vertices_ && a.clusters_ == b.clusters_ &&
           a.edges_ == b.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<VertexSet> clusters_;
  std::vector<std::pair<NodeId, NodeId>> edges_;  // (min, max), sorted
  std::vector<std::vector<NodeId>> adj_;          // ascending
};

enum class TdCondition { kNone, kTreeShape, kT1, kT2, kT3 };

std::string_view to_string(TdCondition c);

/// Outcome of `validate`. On failure `witness` holds:
///   kT1: {v};  kT2: {u, v};  kT3: {v, i, h, j} with v in X^i and X^j but
///   not in X^h for a node h on the i-j path;  kTreeShape: {}.
struct TdValidation {
  TdCondition failed = TdCondition::kNone;
  std::vector<int> witness;
  std::string message;

  bool ok() const noexcept { return failed == TdCondition::kNone; }
  explicit operator bool() const noexcept { return ok(); }
};

TdValidation validate(const TreeDecomposition& td, const Graph& g);

/// Same tree, clusters intersected with `keep`. Vertex ids are unchanged.
TreeDecomposition induced(const TreeDecomposition& td,
                          std::span<const Vertex> keep);

/// Induced decomposition renumbered into the local ids of `sub`.
TreeDecomposition restrict_to(const TreeDecomposition& td,
                              const InducedSubgraph& sub);

/// Contracts every tree edge whose clusters nest, the smaller cluster being
/// absorbed (ties keep the smaller node id). Surviving nodes are renumbered in
/// ascending order of their old ids.
TreeDecomposition make_nonredundant(const TreeDecomposition& td);

bool is_nonredundant(const TreeDecomposition& td);

/// Disjoint union of two decompositions over disjoint vertex sets plus one
/// tree edge joining `a_node` and `b_node`. Nodes of `b` are shifted by
/// a.num_nodes().
TreeDecomposition join_decompositions(const TreeDecomposition& a,
                                      const TreeDecomposition& b,
                                      NodeId a_node, NodeId b_node);

struct HeaviestPathResult {
  std::vector<NodeId> path;  // node sequence, from the smaller endpoint id
  int weight = 0;            // |union of clusters on path|
  Rational relative_weight;  // weight / n
};

/// Exact heaviest path. Uses w(P) = sum |X^i| - sum over path edges
/// |X^i cap X^j|, which holds for every valid decomposition because each
/// vertex occupies a contiguous stretch of any path. Ties resolve to the
/// lexicographically smallest endpoint pair.
HeaviestPathResult heaviest_path(const TreeDecomposition& td, int n);

/// Weight of a heaviest path via a linear two-pass tree DP.
int heaviest_path_weight(const TreeDecomposition& td);

/// r(T,X) = heaviest path weight / n.
Rational relative_heaviest_weight(const TreeDecomposition& td, int n);

/// E_G(i): edges of g with at least one endpoint in X^i.
std::vector<Edge> cluster_incident_edges(const TreeDecomposition& td,
                                         const Graph& g, NodeId i);

/// Parts left after deleting E_G(i): one singleton per vertex of X^i
/// (ascending), then for each tree neighbour h of i (ascending) the union of
/// clusters of h's side of T - i minus X^i. Empty parts are kept.
std::vector<VertexSet> remove_cluster_parts(const TreeDecomposition& td,
                                            NodeId i);

}  // namespace ksec
