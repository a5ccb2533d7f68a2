#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ksec/graph.hpp"
#include "ksec/oracle.hpp"
#include "ksec/rational.hpp"
#include "ksec/tree_decomposition.hpp"
#include "ksec/tree_labeling.hpp"

namespace ksec {

/// P-labeling of a graph with respect to a decomposition path P = (i_0..j_0).
/// Per path node i, the block S_i (ascending ids) then R_i (ascending ids)
/// receives consecutive labels; blocks follow the path order. The marked
/// labels of `labels` are exactly R.
struct TDPLabeling {
  std::vector<NodeId> path;              // L_P, from i_0 to j_0
  std::vector<int> position_of_node;     // node -> index on path, or -1
  std::vector<int> path_index_of;        // A_P as a path index, by vertex
  std::vector<VertexSet> r_sets;         // R_i by path index
  std::vector<VertexSet> s_sets;         // S_i by path index
  std::vector<std::vector<NodeId>> subtree_nodes;  // V(T_i) by path index
  CyclicLabeling labels;                 // A_L, A_V, A_R and d_1

  bool in_r(Vertex x) const { return labels.marked(labels.label_of(x)); }
  NodeId path_node_of(Vertex x) const {
    return path[static_cast<std::size_t>(path_index_of[x])];
  }
  int d_r(Label x, Label y) const { return labels.distance(x, y); }
  int r_size() const { return labels.marked_count(); }
};

/// Throws kInvalidDecomposition if `path` is not a path of T or a vertex is
/// in no cluster, kRedundantDecomposition if some R_i is empty.
TDPLabeling td_p_labeling(const TreeDecomposition& td,
                          std::span<const NodeId> path);

/// Anchor v with d_R(v, v+m) = floor(r m), r = |R| / n, and v or v+m in R.
Label find_anchor(const TDPLabeling& lab, int m);

/// Approximate m-cut with width <= t * max degree, by splitting along one
/// cluster. m in [1, 2n]. Throws kMOutOfRange.
Cut approximate_cut_td(const Graph& g, const TreeDecomposition& td, int m);

/// Cut with |B| = m of minimum width. m in [1, n].
Cut exact_cut_bounded_td(const Graph& g, const TreeDecomposition& td, int m,
                         const OracleLimits& limits = {});

enum class RCutCase { kCase1, kCase2a, kCase2b, kCase3 };

std::string_view to_string(RCutCase c);

struct RCutTrace {
  RCutCase case_tag = RCutCase::kCase1;
  int m = 0;
  Rational r;  // of the nonredundant decomposition actually used
  int t = 0;   // its largest cluster size
  std::int64_t floor_rm = 0;
  int anchor_label = 0;
  Vertex anchor = 0;
  VertexSet m_set;
  /// Path node whose S-set is split (j in Case 2b, i in Case 3), else -1.
  NodeId split_node = -1;
  int m_tilde = 0;
  VertexSet black_split;
  VertexSet v_tilde;
  /// Glued decomposition of G~ (Case 2b / 3 only).
  bool glued_valid = true;
  int glued_width = 0;
  Rational glued_r;
  bool glued_split_clean = true;  // no G~-edge between B_split and the rest
  int inner_width = 0;
  int outer_width = 0;
  /// r of the decomposition induced by G[W].
  Rational r_after;
};

struct RCut {
  Cut cut;
  RCutTrace trace;
  /// Decomposition of G[W] induced by the nonredundant decomposition, with
  /// the vertices of W renumbered 1..|W| ascending.
  TreeDecomposition white_td;
};

/// Cut with |B| = m, width <= (t/2)(log2^2(1/r) + 11 log2(1/r) + 24) Delta,
/// and r of the decomposition induced by G[W] at least r. m in [1, n - 1].
/// `td` is made nonredundant internally.
RCut r_preserving_cut(const Graph& g, const TreeDecomposition& td, int m,
                      const OracleLimits& limits = {});

}  // namespace ksec
