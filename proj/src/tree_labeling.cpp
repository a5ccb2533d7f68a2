#include "ksec/tree_labeling.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "ksec/error.hpp"

namespace ksec {

CyclicLabeling::CyclicLabeling(std::vector<Vertex> vertex_of_label,
                               const std::vector<char>& marked_vertex)
    : n_(static_cast<int>(vertex_of_label.size()) - 1),
      vertex_of_(std::move(vertex_of_label)) {
  label_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
  marked_.assign(static_cast<std::size_t>(n_) + 1, 0);
  prefix_.assign(static_cast<std::size_t>(n_) + 2, 0);
  for (Label l = 1; l <= n_; ++l) {
    const Vertex v = vertex_of_[l];
    if (v < 1 || v > n_ || label_of_[v] != 0) {
      throw Error(ErrorCode::kBadParameters, "labeling is not a bijection");
    }
    label_of_[v] = l;
    marked_[l] = marked_vertex[v];
  }
  for (Label l = 1; l <= n_; ++l) {
    prefix_[l + 1] = prefix_[l] + (marked_[l] ? 1 : 0);
  }
  marked_total_ = prefix_[n_ + 1];
}

int CyclicLabeling::distance(Label x, Label y) const {
  x = normalize(x);
  y = normalize(y);
  if (x <= y) return prefix_[y] - prefix_[x];
  return (marked_total_ - prefix_[x]) + prefix_[y];
}

std::vector<Label> CyclicLabeling::interval(Label x, Label y) const {
  x = normalize(x);
  y = normalize(y);
  std::vector<Label> out;
  for (Label l = x;; l = normalize(static_cast<std::int64_t>(l) + 1)) {
    out.push_back(l);
    if (l == y) break;
  }
  return out;
}

Label CyclicLabeling::find_anchor(int m, const Rational& density) const {
  const std::int64_t target = density.floor_times(m);
  for (Label v = 1; v <= n_; ++v) {
    const Label w = normalize(static_cast<std::int64_t>(v) + m);
    if ((marked_[v] || marked_[w]) && distance(v, w) == target) return v;
  }
  throw Error(ErrorCode::kBadParameters,
              "no anchor for m = " + std::to_string(m));
}

PathDecomposition decompose_along_path(const Graph& tree,
                                       std::span<const Vertex> path) {
  const int n = tree.num_vertices();
  if (n == 0 || tree.num_edges() != n - 1 || components(tree).size() != 1) {
    throw Error(ErrorCode::kNotATree, "decompose_along_path requires a tree");
  }
  PathDecomposition dec;
  dec.path.assign(path.begin(), path.end());
  dec.position_on_path.assign(static_cast<std::size_t>(n) + 1, -1);
  dec.path_vertex_of.assign(static_cast<std::size_t>(n) + 1, 0);
  if (path.empty()) throw Error(ErrorCode::kPathNotInTree, "empty path");
  for (std::size_t h = 0; h < path.size(); ++h) {
    const Vertex v = path[h];
    if (!tree.contains(v) || dec.position_on_path[v] >= 0) {
      throw Error(ErrorCode::kPathNotInTree,
                  "path vertex " + std::to_string(v) + " invalid or repeated");
    }
    if (h > 0 && !tree.has_edge(path[h - 1], v)) {
      throw Error(ErrorCode::kPathNotInTree,
                  "no edge {" + std::to_string(path[h - 1]) + "," +
                      std::to_string(v) + "}");
    }
    dec.position_on_path[v] = static_cast<int>(h);
  }
  dec.subtree_members.resize(path.size());
  std::vector<Vertex> stack;
  for (std::size_t h = 0; h < path.size(); ++h) {
    const Vertex root = path[h];
    VertexSet& members = dec.subtree_members[h];
    dec.path_vertex_of[root] = root;
    stack.assign(1, root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w : tree.neighbors(u)) {
        if (dec.position_on_path[w] >= 0 || dec.path_vertex_of[w] != 0) continue;
        dec.path_vertex_of[w] = root;
        stack.push_back(w);
      }
    }
    std::sort(members.begin(), members.end());
  }
  return dec;
}

PLabeling p_labeling(const Graph& tree, PathDecomposition dec) {
  const int n = tree.num_vertices();
  const auto& path = dec.path;
  // Neighbour order for the DFS: path predecessor first, then ascending id.
  auto ordered_neighbors = [&](Vertex u) {
    std::vector<Vertex> order;
    const int pos = dec.position_on_path[u];
    Vertex first = 0;
    if (pos > 0) first = path[static_cast<std::size_t>(pos) - 1];
    if (first != 0) order.push_back(first);
    for (Vertex w : tree.neighbors(u)) {
      if (w != first) order.push_back(w);
    }
    return order;
  };

  std::vector<Vertex> vertex_of_label(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  struct Frame {
    Vertex v;
    std::vector<Vertex> next;
    std::size_t index;
  };
  std::vector<Frame> stack;
  Label label = 0;
  const Vertex start = path.back();
  visited[start] = 1;
  stack.push_back({start, ordered_neighbors(start), 0});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.index < top.next.size()) {
      const Vertex w = top.next[top.index++];
      if (!visited[w]) {
        visited[w] = 1;
        stack.push_back({w, ordered_neighbors(w), 0});
      }
      continue;
    }
    vertex_of_label[static_cast<std::size_t>(++label)] = top.v;
    stack.pop_back();
  }
  std::vector<char> marked(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : path) marked[v] = 1;
  PLabeling lab;
  lab.labels = CyclicLabeling(std::move(vertex_of_label), marked);
  lab.decomposition = std::move(dec);
  return lab;
}

PLabeling p_labeling(const Graph& tree) {
  auto path = longest_path(tree);
  return p_labeling(tree, decompose_along_path(tree, path));
}

Label find_anchor(const PLabeling& lab, int m) {
  const int n = lab.labels.size();
  return lab.labels.find_anchor(
      m, Rational(lab.labels.marked_count(), n));
}

}  // namespace ksec
