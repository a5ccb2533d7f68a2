#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ksec/graph.hpp"
#include "ksec/rational.hpp"

namespace ksec {

/// Labels are 1..n and are read cyclically: n + 1 is label 1 again.
using Label = std::int32_t;

/// A bijection V <-> [n] with a marked subset of labels (path vertices for
/// trees, the set R for decompositions). Answers the cyclic marked-count
/// distance
///   dist(x, y) = |{marked u between x and y, u != y}|
/// in O(1) through prefix counts.
class CyclicLabeling {
 public:
  CyclicLabeling() = default;
  /// `vertex_of_label[l]` for l in 1..n (index 0 unused); `marked_vertex`
  /// indexed by vertex.
  CyclicLabeling(std::vector<Vertex> vertex_of_label,
                 const std::vector<char>& marked_vertex);

  int size() const noexcept { return n_; }
  Label label_of(Vertex v) const { return label_of_[v]; }
  Vertex vertex_of(Label l) const { return vertex_of_[normalize(l)]; }

  /// Residue of an arbitrary integer into [1, n].
  Label normalize(std::int64_t l) const {
    std::int64_t r = (l - 1) % n_;
    if (r < 0) r += n_;
    return static_cast<Label>(r + 1);
  }

  bool marked(Label l) const { return marked_[normalize(l)] != 0; }
  int marked_count() const noexcept { return marked_total_; }

  /// Number of marked labels in [1, l - 1]; this is dist(1, l).
  int prefix(Label l) const { return prefix_[normalize(l)]; }

  int distance(Label x, Label y) const;

  /// The labels x, x+1, ..., y (cyclic), i.e. everything between x and y.
  std::vector<Label> interval(Label x, Label y) const;

  /// Smallest label v with dist(v, v + m) = floor(density * m) and v or v + m
  /// marked. Throws Error(kBadParameters) if none exists, which cannot happen
  /// when density = marked_count / n and 1 <= m <= n - 1.
  Label find_anchor(int m, const Rational& density) const;

 private:
  int n_ = 0;
  int marked_total_ = 0;
  std::vector<Vertex> vertex_of_;  // by label
  std::vector<Label> label_of_;    // by vertex
  std::vector<char> marked_;       // by label
  std::vector<int> prefix_;        // by label
};

/// A tree split along a path P = (x_0, ..., y_0): removing E_P leaves one
/// subtree T_v per path vertex v.
struct PathDecomposition {
  std::vector<Vertex> path;
  /// path_vertex_of[x] = the path vertex v with x in T_v (index 0 unused).
  std::vector<Vertex> path_vertex_of;
  /// position_on_path[x] = index of x on `path`, or -1.
  std::vector<int> position_on_path;
  /// subtree_members[h] = V(T_{path[h]}), ascending.
  std::vector<VertexSet> subtree_members;

  bool on_path(Vertex x) const { return position_on_path[x] >= 0; }
  const VertexSet& subtree_of(Vertex path_vertex) const {
    return subtree_members[static_cast<std::size_t>(
        position_on_path[path_vertex])];
  }
};

/// Throws Error(kPathNotInTree) unless `path` is a nonempty simple path of
/// `tree`, and Error(kNotATree) if `tree` is not a tree.
PathDecomposition decompose_along_path(const Graph& tree,
                                       std::span<const Vertex> path);

/// P-labeling: post-order DFS from y_0 in which each path vertex visits its
/// path predecessor first and all other neighbours by ascending id.
struct PLabeling {
  PathDecomposition decomposition;
  CyclicLabeling labels;

  Label label_of(Vertex v) const { return labels.label_of(v); }
  Vertex vertex_of(Label l) const { return labels.vertex_of(l); }
  bool on_path(Label l) const { return labels.marked(l); }
  /// Label of the path vertex responsible for the vertex labelled l.
  Label path_vertex_label(Label l) const {
    return labels.label_of(decomposition.path_vertex_of[vertex_of(l)]);
  }
  int d_p(Label x, Label y) const { return labels.distance(x, y); }
};

PLabeling p_labeling(const Graph& tree, PathDecomposition dec);

/// Convenience: longest path + decomposition + labeling.
PLabeling p_labeling(const Graph& tree);

/// The anchor label v with d_P(v, v+m) = floor(diam* m) and v or v+m on P.
Label find_anchor(const PLabeling& lab, int m);

}  // namespace ksec
