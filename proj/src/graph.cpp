#include "ksec/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "ksec/error.hpp"

namespace ksec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kNotATree: return "NotATree";
    case ErrorCode::kNotAForest: return "NotAForest";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kPathNotInTree: return "PathNotInTree";
    case ErrorCode::kMOutOfRange: return "MOutOfRange";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kKNotPowerOfTwo: return "KNotPowerOfTwo";
    case ErrorCode::kSizesDontSum: return "SizesDontSum";
    case ErrorCode::kRedundantDecomposition: return "RedundantDecomposition";
    case ErrorCode::kInvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::kWidthTooLarge: return "WidthTooLarge";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    Vertex u = std::min(e.u, e.v);
    Vertex v = std::max(e.u, e.v);
    if (u < 1 || v > n) {
      throw Error(ErrorCode::kInvalidGraph,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} outside [1," + std::to_string(n) + "]");
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidGraph,
                  "self-loop at " + std::to_string(u));
    }
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::kInvalidGraph,
                "parallel edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}");
  }
  for (const Edge& e : g.edges_) {
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::from_edges(int n,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.push_back({u, v});
  return from_edges(n, list);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

VertexSet InducedSubgraph::to_parent(std::span<const Vertex> local) const {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(original[v]);
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  const int n = g.num_vertices();
  std::vector<Vertex> local(static_cast<std::size_t>(n) + 1, 0);
  VertexSet sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  InducedSubgraph sub;
  sub.original.assign(1, 0);
  for (Vertex v : sorted) {
    if (!g.contains(v) || local[v] != 0) {
      throw Error(ErrorCode::kBadParameters,
                  "induced subgraph vertex " + std::to_string(v) +
                      " invalid or repeated");
    }
    sub.original.push_back(v);
    local[v] = static_cast<Vertex>(sub.original.size() - 1);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.u] != 0 && local[e.v] != 0) {
      edges.push_back({local[e.u], local[e.v]});
    }
  }
  sub.graph = Graph::from_edges(static_cast<int>(sorted.size()), edges);
  return sub;
}

bool validate_forest(const Graph& g) {
  // A simple graph is a forest iff m = n - (#components).
  return g.num_edges() ==
         g.num_vertices() - static_cast<int>(components(g).size());
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// BFS from `source` over its component. Returns the farthest vertex, ties to
// the smallest id. `parent` receives the BFS tree.
Vertex farthest_from(const Graph& g, Vertex source, std::vector<int>& dist,
                     std::vector<Vertex>& parent) {
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  parent[source] = 0;
  Vertex best = source;
  std::vector<Vertex> touched{source};
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] > dist[best] || (dist[u] == dist[best] && u < best)) best = u;
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
        touched.push_back(w);
      }
    }
  }
  // Leave `dist` clean for the next sweep; parent pointers stay valid.
  Vertex result = best;
  for (Vertex v : touched) dist[v] = -1;
  return result;
}

}  // namespace

std::vector<Vertex> longest_path_in_component(const Graph& forest,
                                              Vertex start) {
  const auto size = static_cast<std::size_t>(forest.num_vertices()) + 1;
  std::vector<int> dist(size, -1);
  std::vector<Vertex> parent(size, 0);
  Vertex a = farthest_from(forest, start, dist, parent);
  Vertex b = farthest_from(forest, a, dist, parent);
  std::vector<Vertex> path;
  for (Vertex x = b; x != 0; x = parent[x]) path.push_back(x);
  // path runs b -> a; report it starting at a.
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Vertex> longest_path(const Graph& tree) {
  const int n = tree.num_vertices();
  if (n == 0 || tree.num_edges() != n - 1 || components(tree).size() != 1) {
    throw Error(ErrorCode::kNotATree, "longest_path requires a tree");
  }
  return longest_path_in_component(tree, 1);
}

Rational relative_diameter(const Graph& forest) {
  if (!validate_forest(forest)) {
    throw Error(ErrorCode::kNotAForest, "relative_diameter requires a forest");
  }
  const int n = forest.num_vertices();
  if (n == 0) return Rational(1);
  std::int64_t on_paths = 0;
  for (const VertexSet& comp : components(forest)) {
    on_paths += static_cast<std::int64_t>(
        longest_path_in_component(forest, comp.front()).size());
  }
  return Rational(on_paths, n);
}

int cut_width(const Graph& g, std::span<const VertexSet> parts) {
  const int n = g.num_vertices();
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  int covered = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v : parts[p]) {
      if (!g.contains(v) || owner[v] != -1) {
        throw Error(ErrorCode::kNotAPartition,
                    "vertex " + std::to_string(v) +
                        " out of range or in two parts");
      }
      owner[v] = static_cast<int>(p);
      ++covered;
    }
  }
  if (covered != n) {
    throw Error(ErrorCode::kNotAPartition, "parts do not cover V");
  }
  int width = 0;
  for (const Edge& e : g.edges()) {
    if (owner[e.u] != owner[e.v]) ++width;
  }
  return width;
}

int boundary_width(const Graph& g, std::span<const Vertex> black) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (Vertex v : black) in[v] = 1;
  int width = 0;
  for (const Edge& e : g.edges()) {
    if (in[e.u] != in[e.v]) ++width;
  }
  return width;
}

VertexSet complement(std::span<const Vertex> subset, int n) {
  std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : subset) in[v] = 1;
  VertexSet out;
  out.reserve(static_cast<std::size_t>(n) - subset.size());
  for (Vertex v = 1; v <= n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

Cut make_cut(const Graph& g, VertexSet black) {
  std::sort(black.begin(), black.end());
  Cut cut;
  cut.width = boundary_width(g, black);
  cut.white = complement(black, g.num_vertices());
  cut.black = std::move(black);
  return cut;
}

Graph link_components(const Graph& forest) {
  if (!validate_forest(forest)) {
    throw Error(ErrorCode::kNotAForest, "link_components requires a forest");
  }
  auto comps = components(forest);
  if (comps.size() <= 1) return forest;
  std::vector<Edge> edges(forest.edges().begin(), forest.edges().end());
  Vertex previous_end = 0;
  for (const VertexSet& comp : comps) {
    auto path = longest_path_in_component(forest, comp.front());
    if (previous_end != 0) edges.push_back({previous_end, path.front()});
    previous_end = path.back();
  }
  return Graph::from_edges(forest.num_vertices(), edges);
}

bool is_balanced(std::span<const VertexSet> parts, int n) {
  if (parts.empty()) return n == 0;
  const auto k = static_cast<int>(parts.size());
  const int lo = n / k;
  const int hi = (n + k - 1) / k;
  for (const VertexSet& p : parts) {
    const auto s = static_cast<int>(p.size());
    if (s < lo || s > hi) return false;
  }
  return true;
}

}  // namespace ksec
