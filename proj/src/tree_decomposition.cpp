#include "ksec/tree_decomposition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "ksec/error.hpp"

namespace ksec {

namespace {

int intersection_size(const VertexSet& a, const VertexSet& b) {
  int count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Path of tree nodes from `from` to `to` (inclusive).
std::vector<NodeId> tree_path(const TreeDecomposition& td, NodeId from,
                              NodeId to) {
  std::vector<NodeId> parent(static_cast<std::size_t>(td.num_nodes()), -1);
  std::deque<NodeId> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (NodeId w : td.tree_neighbors(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  std::vector<NodeId> path;
  for (NodeId x = to; x != from; x = parent[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::string_view to_string(TdCondition c) {
  switch (c) {
    case TdCondition::kNone: return "ok";
    case TdCondition::kTreeShape: return "TreeShape";
    case TdCondition::kT1: return "T1";
    case TdCondition::kT2: return "T2";
    case TdCondition::kT3: return "T3";
  }
  return "?";
}

TreeDecomposition::TreeDecomposition(
    int num_vertices, std::vector<VertexSet> clusters,
    std::vector<std::pair<NodeId, NodeId>> tree_edges)
    : num_vertices_(num_vertices), clusters_(std::move(clusters)) {
  const int nodes = num_nodes();
  for (auto& c : clusters_) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (!c.empty() && (c.front() < 1 || c.back() > num_vertices_)) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "cluster vertex outside [1," + std::to_string(num_vertices_) +
                      "]");
    }
  }
  adj_.resize(static_cast<std::size_t>(nodes));
  for (auto [a, b] : tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "bad tree edge " + std::to_string(a) + "-" +
                      std::to_string(b));
    }
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::kInvalidDecomposition, "repeated tree edge");
  }
  for (auto [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int TreeDecomposition::max_cluster_size() const {
  std::size_t best = 0;
  for (const auto& c : clusters_) best = std::max(best, c.size());
  return static_cast<int>(best);
}

std::int64_t TreeDecomposition::size() const {
  std::int64_t total = num_nodes();
  for (const auto& c : clusters_) total += static_cast<std::int64_t>(c.size());
  return total;
}

bool TreeDecomposition::tree_is_tree() const {
  const int nodes = num_nodes();
  if (nodes == 0) return false;
  if (static_cast<int>(edges_.size()) != nodes - 1) return false;
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    for (NodeId w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == nodes;
}

TdValidation validate(const TreeDecomposition& td, const Graph& g) {
  TdValidation result;
  if (!td.tree_is_tree()) {
    result.failed = TdCondition::kTreeShape;
    result.message = "decomposition tree is not a tree";
    return result;
  }
  const int n = g.num_vertices();
  if (td.num_vertices() != n) {
    result.failed = TdCondition::kT1;
    result.message = "decomposition is over " +
                     std::to_string(td.num_vertices()) + " vertices, graph has " +
                     std::to_string(n);
    return result;
  }
  // occurrences[v] = nodes whose cluster holds v.
  std::vector<std::vector<NodeId>> occurrences(static_cast<std::size_t>(n) + 1);
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    for (Vertex v : td.cluster(i)) occurrences[v].push_back(i);
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (occurrences[v].empty()) {
      result.failed = TdCondition::kT1;
      result.witness = {v};
      result.message = "vertex " + std::to_string(v) + " is in no cluster";
      return result;
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (NodeId i : occurrences[e.u]) {
      const auto& c = td.cluster(i);
      if (std::binary_search(c.begin(), c.end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      result.failed = TdCondition::kT2;
      result.witness = {e.u, e.v};
      result.message = "edge {" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + "} is in no cluster";
      return result;
    }
  }
  // (T3'): T[I_v] connected for every v.
  std::vector<int> mark(static_cast<std::size_t>(td.num_nodes()), 0);
  int stamp = 0;
  for (Vertex v = 1; v <= n; ++v) {
    ++stamp;
    for (NodeId i : occurrences[v]) mark[i] = stamp;
    ++stamp;
    const NodeId start = occurrences[v].front();
    std::vector<NodeId> stack{start};
    mark[start] = stamp;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : td.tree_neighbors(u)) {
        if (mark[w] == stamp - 1) {
          mark[w] = stamp;
          stack.push_back(w);
        }
      }
    }
    for (NodeId j : occurrences[v]) {
      if (mark[j] == stamp) continue;
      auto path = tree_path(td, start, j);
      NodeId gap = -1;
      for (NodeId h : path) {
        const auto& c = td.cluster(h);
        if (!std::binary_search(c.begin(), c.end(), v)) {
          gap = h;
          break;
        }
      }
      result.failed = TdCondition::kT3;
      result.witness = {v, start, gap, j};
      result.message = "vertex " + std::to_string(v) + " in nodes " +
                       std::to_string(start) + " and " + std::to_string(j) +
                       " but not in node " + std::to_string(gap);
      return result;
    }
  }
  return result;
}

TreeDecomposition induced(const TreeDecomposition& td,
                          std::span<const Vertex> keep) {
  std::vector<char> in(static_cast<std::size_t>(td.num_vertices()) + 1, 0);
  for (Vertex v : keep) in[v] = 1;
  std::vector<VertexSet> clusters;
  clusters.reserve(static_cast<std::size_t>(td.num_nodes()));
  for (const auto& c : td.clusters()) {
    VertexSet kept;
    for (Vertex v : c) {
      if (in[v]) kept.push_back(v);
    }
    clusters.push_back(std::move(kept));
  }
  return TreeDecomposition(td.num_vertices(), std::move(clusters),
                           td.tree_edges());
}

TreeDecomposition restrict_to(const TreeDecomposition& td,
                              const InducedSubgraph& sub) {
  std::vector<Vertex> local(static_cast<std::size_t>(td.num_vertices()) + 1, 0);
  for (std::size_t i = 1; i < sub.original.size(); ++i) {
    local[sub.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<VertexSet> clusters;
  clusters.reserve(static_cast<std::size_t>(td.num_nodes()));
  for (const auto& c : td.clusters()) {
    VertexSet kept;
    for (Vertex v : c) {
      if (local[v] != 0) kept.push_back(local[v]);
    }
    clusters.push_back(std::move(kept));
  }
  return TreeDecomposition(sub.graph.num_vertices(), std::move(clusters),
                           td.tree_edges());
}

TreeDecomposition make_nonredundant(const TreeDecomposition& td) {
  const int nodes = td.num_nodes();
  std::vector<std::set<NodeId>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : td.tree_edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(static_cast<std::size_t>(nodes), 1);
  std::set<std::pair<NodeId, NodeId>> pending(td.tree_edges().begin(),
                                              td.tree_edges().end());
  while (!pending.empty()) {
    auto [a, b] = *pending.begin();
    pending.erase(pending.begin());
    if (!alive[a] || !alive[b] || !adj[a].count(b)) continue;
    const bool a_in_b = is_subset(td.cluster(a), td.cluster(b));
    const bool b_in_a = is_subset(td.cluster(b), td.cluster(a));
    if (!a_in_b && !b_in_a) continue;
    NodeId keep = 0;
    NodeId gone = 0;
    if (a_in_b && b_in_a) {
      keep = std::min(a, b);
      gone = std::max(a, b);
    } else if (a_in_b) {
      keep = b;
      gone = a;
    } else {
      keep = a;
      gone = b;
    }
    adj[keep].erase(gone);
    for (NodeId w : adj[gone]) {
      if (w == keep) continue;
      adj[w].erase(gone);
      adj[w].insert(keep);
      adj[keep].insert(w);
      pending.emplace(std::min(keep, w), std::max(keep, w));
    }
    adj[gone].clear();
    alive[gone] = 0;
  }
  std::vector<NodeId> renumber(static_cast<std::size_t>(nodes), -1);
  std::vector<VertexSet> clusters;
  for (NodeId i = 0; i < nodes; ++i) {
    if (alive[i]) {
      renumber[i] = static_cast<NodeId>(clusters.size());
      clusters.push_back(td.cluster(i));
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < nodes; ++i) {
    if (!alive[i]) continue;
    for (NodeId w : adj[i]) {
      if (i < w) edges.emplace_back(renumber[i], renumber[w]);
    }
  }
  return TreeDecomposition(td.num_vertices(), std::move(clusters),
                           std::move(edges));
}

bool is_nonredundant(const TreeDecomposition& td) {
  for (auto [a, b] : td.tree_edges()) {
    if (is_subset(td.cluster(a), td.cluster(b)) ||
        is_subset(td.cluster(b), td.cluster(a))) {
      return false;
    }
  }
  return true;
}

TreeDecomposition join_decompositions(const TreeDecomposition& a,
                                      const TreeDecomposition& b,
                                      NodeId a_node, NodeId b_node) {
  const NodeId offset = a.num_nodes();
  std::vector<VertexSet> clusters = a.clusters();
  clusters.insert(clusters.end(), b.clusters().begin(), b.clusters().end());
  std::vector<std::pair<NodeId, NodeId>> edges = a.tree_edges();
  for (auto [x, y] : b.tree_edges()) edges.emplace_back(x + offset, y + offset);
  edges.emplace_back(a_node, b_node + offset);
  return TreeDecomposition(std::max(a.num_vertices(), b.num_vertices()),
                           std::move(clusters), std::move(edges));
}

HeaviestPathResult heaviest_path(const TreeDecomposition& td, int n) {
  const int nodes = td.num_nodes();
  HeaviestPathResult best;
  if (nodes == 0) {
    best.relative_weight = Rational(0);
    return best;
  }
  // Overlap between a node and each tree neighbour, parallel to adjacency.
  std::vector<std::vector<int>> overlap(static_cast<std::size_t>(nodes));
  for (NodeId i = 0; i < nodes; ++i) {
    for (NodeId w : td.tree_neighbors(i)) {
      overlap[i].push_back(intersection_size(td.cluster(i), td.cluster(w)));
    }
  }
  std::pair<NodeId, NodeId> best_pair{0, 0};
  int best_weight = -1;
  std::vector<int> weight(static_cast<std::size_t>(nodes));
  std::vector<NodeId> parent(static_cast<std::size_t>(nodes));
  std::vector<NodeId> best_parent;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < nodes; ++s) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    weight[s] = static_cast<int>(td.cluster(s).size());
    stack.assign(1, s);
    bool improved = false;
    NodeId improved_end = s;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      if (u >= s) {
        std::pair<NodeId, NodeId> key{s, u};
        if (weight[u] > best_weight ||
            (weight[u] == best_weight && key < best_pair)) {
          best_weight = weight[u];
          best_pair = key;
          improved = true;
          improved_end = u;
        }
      }
      auto neighbors = td.tree_neighbors(u);
      for (std::size_t k = 0; k < neighbors.size(); ++k) {
        NodeId w = neighbors[k];
        if (parent[w] >= 0) continue;
        parent[w] = u;
        weight[w] = weight[u] + static_cast<int>(td.cluster(w).size()) -
                    overlap[u][k];
        stack.push_back(w);
      }
    }
    if (improved) {
      best.path.clear();
      for (NodeId x = improved_end; x != s; x = parent[x]) best.path.push_back(x);
      best.path.push_back(s);
      std::reverse(best.path.begin(), best.path.end());
    }
  }
  best.weight = best_weight;
  best.relative_weight = n > 0 ? Rational(best_weight, n) : Rational(1);
  return best;
}

int heaviest_path_weight(const TreeDecomposition& td) {
  const int nodes = td.num_nodes();
  if (nodes == 0) return 0;
  std::vector<NodeId> order;
  std::vector<NodeId> parent(static_cast<std::size_t>(nodes), -1);
  order.reserve(static_cast<std::size_t>(nodes));
  std::vector<NodeId> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (NodeId w : td.tree_neighbors(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        stack.push_back(w);
      }
    }
  }
  // down[i]: heaviest path starting at i and descending into its subtree.
  std::vector<int> down(static_cast<std::size_t>(nodes), 0);
  int best = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    NodeId u = *it;
    const int own = static_cast<int>(td.cluster(u).size());
    int top1 = 0;
    int top2 = 0;
    for (NodeId w : td.tree_neighbors(u)) {
      if (w == parent[u] && u != 0) continue;
      if (parent[w] != u) continue;
      const int gain =
          down[w] - intersection_size(td.cluster(u), td.cluster(w));
      if (gain > top1) {
        top2 = top1;
        top1 = gain;
      } else if (gain > top2) {
        top2 = gain;
      }
    }
    down[u] = own + top1;
    best = std::max(best, own + top1 + top2);
  }
  return best;
}

Rational relative_heaviest_weight(const TreeDecomposition& td, int n) {
  if (n == 0) return Rational(1);
  return Rational(heaviest_path_weight(td), n);
}

std::vector<Edge> cluster_incident_edges(const TreeDecomposition& td,
                                         const Graph& g, NodeId i) {
  std::vector<char> in(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
  for (Vertex v : td.cluster(i)) in[v] = 1;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (in[e.u] || in[e.v]) out.push_back(e);
  }
  return out;
}

std::vector<VertexSet> remove_cluster_parts(const TreeDecomposition& td,
                                            NodeId i) {
  std::vector<VertexSet> parts;
  const auto& own = td.cluster(i);
  for (Vertex v : own) parts.push_back({v});
  std::vector<char> in_own(static_cast<std::size_t>(td.num_vertices()) + 1, 0);
  for (Vertex v : own) in_own[v] = 1;
  std::vector<char> seen_node(static_cast<std::size_t>(td.num_nodes()), 0);
  seen_node[i] = 1;
  std::vector<int> vertex_stamp(static_cast<std::size_t>(td.num_vertices()) + 1,
                                -1);
  int stamp = 0;
  for (NodeId h : td.tree_neighbors(i)) {
    VertexSet part;
    std::vector<NodeId> stack{h};
    seen_node[h] = 1;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (Vertex v : td.cluster(u)) {
        if (!in_own[v] && vertex_stamp[v] != stamp) {
          vertex_stamp[v] = stamp;
          part.push_back(v);
        }
      }
      for (NodeId w : td.tree_neighbors(u)) {
        if (!seen_node[w]) {
          seen_node[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
    ++stamp;
  }
  return parts;
}

}  // namespace ksec
