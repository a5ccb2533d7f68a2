#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ksec/rational.hpp"

namespace ksec {

/// Graph vertices are dense 1-based ids in [1, n].
using Vertex = std::int32_t;

/// Vertex sets are kept as ascending vectors throughout the library.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 1..n with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list. Endpoints may be given in any order.
  /// Throws Error(kInvalidGraph) on self-loops, parallel edges or ids outside
  /// [1, n].
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_{1};
  std::vector<Edge> edges_;
};

/// A two-sided cut (B, W).
struct Cut {
  VertexSet black;
  VertexSet white;
  int width = 0;
};

/// A partition into k ordered parts together with its width.
struct KSection {
  std::vector<VertexSet> parts;
  int width = 0;
};

/// The subgraph induced by a vertex subset, renumbered to 1..|subset| in
/// ascending order of original id. `original[i]` is the parent id of new
/// vertex i (index 0 unused).
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;

  VertexSet to_parent(std::span<const Vertex> local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool validate_forest(const Graph& g);
int max_degree(const Graph& g);

/// Connected components, each ascending, ordered by minimum vertex id.
std::vector<VertexSet> components(const Graph& g);

/// Double-sweep longest path. Sweeps start at the smallest vertex id and break
/// distance ties toward the smaller id. Returns v_0..v_l with l = diam.
/// Throws Error(kNotATree) on a disconnected or cyclic input.
std::vector<Vertex> longest_path(const Graph& tree);

/// Longest path of the component containing `start` of a forest.
std::vector<Vertex> longest_path_in_component(const Graph& forest,
                                              Vertex start);

/// diam*(G) = (1/n) * sum over components of (diam + 1). Throws kNotAForest.
Rational relative_diameter(const Graph& forest);

/// Number of edges with endpoints in distinct parts. Throws kNotAPartition if
/// the parts do not partition V(g). Empty parts are allowed.
int cut_width(const Graph& g, std::span<const VertexSet> parts);

/// Width of (B, V \ B) for an arbitrary subset B.
int boundary_width(const Graph& g, std::span<const Vertex> black);

/// Builds the cut (black, V \ black) with its width.
Cut make_cut(const Graph& g, VertexSet black);

/// Joins the components of a forest into one tree by chaining the ends of
/// their longest paths. The result keeps diam* and, when max_degree >= 2, the
/// maximum degree. Connected input is returned unchanged.
Graph link_components(const Graph& forest);

/// Whether the part sizes satisfy floor(n/k) <= |V_l| <= ceil(n/k).
bool is_balanced(std::span<const VertexSet> parts, int n);

/// Complement of a subset of [1, n], ascending.
VertexSet complement(std::span<const Vertex> subset, int n);

}  // namespace ksec
