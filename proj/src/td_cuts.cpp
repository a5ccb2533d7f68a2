#include "ksec/td_cuts.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ksec/error.hpp"

namespace ksec {

namespace {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

// Local ids (in `sub`) of a sorted subset of sub's original vertices.
VertexSet to_local(const InducedSubgraph& sub, const VertexSet& parent_ids) {
  VertexSet out;
  out.reserve(parent_ids.size());
  for (Vertex v : parent_ids) {
    auto it = std::lower_bound(sub.original.begin() + 1, sub.original.end(), v);
    out.push_back(static_cast<Vertex>(it - sub.original.begin()));
  }
  return out;
}

}  // namespace

std::string_view to_string(RCutCase c) {
  switch (c) {
    case RCutCase::kCase1: return "Case1";
    case RCutCase::kCase2a: return "Case2a";
    case RCutCase::kCase2b: return "Case2b";
    case RCutCase::kCase3: return "Case3";
  }
  return "?";
}

TDPLabeling td_p_labeling(const TreeDecomposition& td,
                          std::span<const NodeId> path) {
  const int n = td.num_vertices();
  const int nodes = td.num_nodes();
  TDPLabeling lab;
  lab.path.assign(path.begin(), path.end());
  lab.position_of_node.assign(static_cast<std::size_t>(nodes), -1);
  if (path.empty()) {
    throw Error(ErrorCode::kInvalidDecomposition, "empty decomposition path");
  }
  for (std::size_t h = 0; h < path.size(); ++h) {
    const NodeId i = path[h];
    if (i < 0 || i >= nodes || lab.position_of_node[i] >= 0) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "path node " + std::to_string(i) + " invalid or repeated");
    }
    if (h > 0) {
      const auto nb = td.tree_neighbors(path[h - 1]);
      if (std::find(nb.begin(), nb.end(), i) == nb.end()) {
        throw Error(ErrorCode::kInvalidDecomposition,
                    "path nodes " + std::to_string(path[h - 1]) + " and " +
                        std::to_string(i) + " are not adjacent");
      }
    }
    lab.position_of_node[i] = static_cast<int>(h);
  }
  const std::size_t len = path.size();
  lab.path_index_of.assign(static_cast<std::size_t>(n) + 1, -1);
  lab.r_sets.resize(len);
  lab.s_sets.resize(len);
  lab.subtree_nodes.resize(len);
  std::vector<char> in_r(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t h = 0; h < len; ++h) {
    for (Vertex x : td.cluster(path[h])) {
      if (lab.path_index_of[x] >= 0) continue;
      lab.path_index_of[x] = static_cast<int>(h);
      in_r[x] = 1;
      lab.r_sets[h].push_back(x);
    }
    if (lab.r_sets[h].empty()) {
      throw Error(ErrorCode::kRedundantDecomposition,
                  "R is empty at path node " + std::to_string(path[h]));
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  for (std::size_t h = 0; h < len; ++h) {
    auto& members = lab.subtree_nodes[h];
    members.push_back(path[h]);
    seen[path[h]] = 1;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (NodeId j : td.tree_neighbors(members[head])) {
        if (seen[j] || lab.position_of_node[j] >= 0) continue;
        seen[j] = 1;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    for (NodeId j : members) {
      for (Vertex x : td.cluster(j)) {
        if (in_r[x]) continue;
        if (lab.path_index_of[x] < 0) {
          lab.path_index_of[x] = static_cast<int>(h);
          lab.s_sets[h].push_back(x);
        } else if (lab.path_index_of[x] != static_cast<int>(h)) {
          throw Error(ErrorCode::kInvalidDecomposition,
                      "vertex " + std::to_string(x) +
                          " occurs in two subtrees of the path");
        }
      }
    }
    std::sort(lab.s_sets[h].begin(), lab.s_sets[h].end());
    lab.s_sets[h].erase(std::unique(lab.s_sets[h].begin(), lab.s_sets[h].end()),
                        lab.s_sets[h].end());
    std::sort(lab.r_sets[h].begin(), lab.r_sets[h].end());
  }
  for (Vertex x = 1; x <= n; ++x) {
    if (lab.path_index_of[x] < 0) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "vertex " + std::to_string(x) + " in no cluster");
    }
  }
  std::vector<Vertex> vertex_of_label(static_cast<std::size_t>(n) + 1, 0);
  Label next = 0;
  for (std::size_t h = 0; h < len; ++h) {
    for (Vertex x : lab.s_sets[h]) vertex_of_label[++next] = x;
    for (Vertex x : lab.r_sets[h]) vertex_of_label[++next] = x;
  }
  lab.labels = CyclicLabeling(std::move(vertex_of_label), in_r);
  return lab;
}

Label find_anchor(const TDPLabeling& lab, int m) {
  return lab.labels.find_anchor(m,
                                Rational(lab.r_size(), lab.labels.size()));
}

Cut approximate_cut_td(const Graph& g, const TreeDecomposition& td, int m) {
  const int n = g.num_vertices();
  if (m < 1 || m > 2 * n) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(2 * n) + "]");
  }
  if (td.num_vertices() != n || td.num_nodes() == 0 || !td.tree_is_tree()) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "decomposition does not match the graph");
  }
  if (m >= n) return make_cut(g, complement({}, n));

  const int nodes = td.num_nodes();
  std::vector<NodeId> parent(static_cast<std::size_t>(nodes), -1);
  std::vector<NodeId> order{0};
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeId j : td.tree_neighbors(order[head])) {
      if (seen[j]) continue;
      seen[j] = 1;
      parent[j] = order[head];
      order.push_back(j);
    }
  }
  // D_j = union of clusters below j, minus the parent's cluster. The vertex
  // counts follow from ownership: each vertex belongs to the topmost node
  // containing it, and lies in D_j iff its owner is in j's subtree and it is
  // not in X^parent(j).
  std::vector<NodeId> owner(static_cast<std::size_t>(n) + 1, -1);
  for (NodeId i : order) {
    for (Vertex x : td.cluster(i)) {
      if (owner[x] < 0) owner[x] = i;
    }
  }
  std::vector<int> owned_below(static_cast<std::size_t>(nodes), 0);
  for (Vertex x = 1; x <= n; ++x) {
    if (owner[x] < 0) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "vertex " + std::to_string(x) + " in no cluster");
    }
    ++owned_below[owner[x]];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) owned_below[parent[*it]] += owned_below[*it];
  }
  // Vertices owned below j are exactly D_j: anything in X^parent(j) that
  // occurs below j is owned at or above parent(j) by (T3').
  auto children = [&](NodeId x) {
    std::vector<NodeId> out;
    for (NodeId j : td.tree_neighbors(x)) {
      if (j != parent[x]) out.push_back(j);
    }
    return out;
  };
  NodeId x = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (NodeId c : children(x)) {
      if (owned_below[c] > m) {
        x = c;
        moved = true;
        break;
      }
    }
  }
  // Parts: child subtrees, then singletons of vertices owned by x.
  std::vector<std::pair<NodeId, Vertex>> parts;  // (child, 0) or (-1, v)
  std::vector<int> part_size;
  for (NodeId c : children(x)) {
    if (owned_below[c] == 0) continue;
    parts.emplace_back(c, 0);
    part_size.push_back(owned_below[c]);
  }
  for (Vertex v : td.cluster(x)) {
    if (owner[v] == x) {
      parts.emplace_back(-1, v);
      part_size.push_back(1);
    }
  }
  std::vector<std::size_t> chosen;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (2 * part_size[p] >= m) {
      chosen.push_back(p);
      break;
    }
  }
  if (chosen.empty()) {
    int total = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      chosen.push_back(p);
      total += part_size[p];
      if (2 * total >= m) break;
    }
  }
  std::vector<char> chosen_node(static_cast<std::size_t>(nodes), 0);
  VertexSet black;
  for (std::size_t p : chosen) {
    if (parts[p].first >= 0) {
      chosen_node[parts[p].first] = 1;
    } else {
      black.push_back(parts[p].second);
    }
  }
  for (NodeId i : order) {
    if (parent[i] >= 0 && chosen_node[parent[i]] && parent[i] != x) {
      chosen_node[i] = 1;
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (chosen_node[owner[v]]) black.push_back(v);
  }
  std::sort(black.begin(), black.end());
  return make_cut(g, std::move(black));
}

Cut exact_cut_bounded_td(const Graph& g, const TreeDecomposition& td, int m,
                         const OracleLimits& limits) {
  const int n = g.num_vertices();
  if (m < 1 || m > n) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(n) + "]");
  }
  return dp_min_size_cut_td(g, td, m, limits);
}

RCut r_preserving_cut(const Graph& g, const TreeDecomposition& td, int m,
                      const OracleLimits& limits) {
  const int n = g.num_vertices();
  if (m < 1 || m > n - 1) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(n - 1) + "]");
  }
  if (td.num_vertices() != n) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "decomposition has " + std::to_string(td.num_vertices()) +
                    " vertices, graph has " + std::to_string(n));
  }
  const TreeDecomposition norm = make_nonredundant(td);
  const HeaviestPathResult hp = heaviest_path(norm, n);
  const TDPLabeling lab = td_p_labeling(norm, hp.path);
  const CyclicLabeling& labels = lab.labels;

  RCut out;
  RCutTrace& tr = out.trace;
  tr.m = m;
  tr.r = hp.relative_weight;
  tr.t = norm.max_cluster_size();
  tr.floor_rm = tr.r.floor_times(m);
  const Label v = find_anchor(lab, m);
  const Label w = labels.normalize(static_cast<std::int64_t>(v) + m);
  const Label last = labels.normalize(static_cast<std::int64_t>(v) + m - 1);
  tr.anchor_label = v;
  tr.anchor = labels.vertex_of(v);
  for (Label l : labels.interval(v, last)) tr.m_set.push_back(labels.vertex_of(l));
  std::sort(tr.m_set.begin(), tr.m_set.end());

  // Splits S_h with an approximate cut and glues the decomposition of G~.
  auto split = [&](int h) {
    const NodeId node = lab.path[static_cast<std::size_t>(h)];
    const VertexSet& s = lab.s_sets[static_cast<std::size_t>(h)];
    tr.split_node = node;
    tr.m_tilde = 2 * static_cast<int>(set_intersection(s, tr.m_set).size());
    const InducedSubgraph sub = induced_subgraph(g, s);
    const Cut c = approximate_cut_td(sub.graph, restrict_to(norm, sub),
                                     tr.m_tilde);
    tr.black_split = sub.to_parent(c.black);
    tr.v_tilde = set_union(set_minus(tr.m_set, s), tr.black_split);

    // G~ = G[V~] minus E_G(node), with a decomposition glued from the
    // decompositions induced by V~ \ B and B.
    const InducedSubgraph gt = induced_subgraph(g, tr.v_tilde);
    const VertexSet& cluster = norm.cluster(node);
    auto in_cluster = [&](Vertex local) {
      return std::binary_search(cluster.begin(), cluster.end(),
                                gt.original[local]);
    };
    std::vector<Edge> kept;
    for (const Edge& e : gt.graph.edges()) {
      if (!in_cluster(e.u) && !in_cluster(e.v)) kept.push_back(e);
    }
    const Graph g_tilde = Graph::from_edges(gt.graph.num_vertices(), kept);
    const VertexSet black_local = to_local(gt, tr.black_split);
    const VertexSet rest_local =
        complement(black_local, gt.graph.num_vertices());
    const TreeDecomposition all = restrict_to(norm, gt);
    const TreeDecomposition part1 = induced(all, rest_local);
    const TreeDecomposition part2 = induced(all, black_local);
    NodeId h0 = 0;
    while (h0 < part2.num_nodes() && part2.cluster(h0).empty()) ++h0;
    const TreeDecomposition glued =
        join_decompositions(part1, part2, hp.path.back(), h0);
    tr.glued_valid = validate(glued, g_tilde).ok();
    tr.glued_width = glued.width();
    tr.glued_r = Rational(heaviest_path_weight(glued), gt.graph.num_vertices());
    tr.glued_split_clean = true;
    std::vector<char> is_black(static_cast<std::size_t>(gt.graph.num_vertices()) + 1, 0);
    for (Vertex u : black_local) is_black[u] = 1;
    for (const Edge& e : g_tilde.edges()) {
      if (is_black[e.u] != is_black[e.v]) tr.glued_split_clean = false;
    }
  };

  const bool v_in = labels.marked(v);
  const bool w_in = labels.marked(w);
  if (v_in && w_in) {
    tr.case_tag = RCutCase::kCase1;
    tr.v_tilde = tr.m_set;
  } else if (v_in && labels.marked(last)) {
    tr.case_tag = RCutCase::kCase2a;
    tr.v_tilde = tr.m_set;
  } else if (v_in) {
    tr.case_tag = RCutCase::kCase2b;
    split(lab.path_index_of[labels.vertex_of(w)]);
  } else {
    tr.case_tag = RCutCase::kCase3;
    split(lab.path_index_of[labels.vertex_of(v)]);
  }

  tr.outer_width = boundary_width(g, tr.v_tilde);
  VertexSet black;
  const InducedSubgraph inner_graph = induced_subgraph(g, tr.v_tilde);
  if (static_cast<int>(tr.v_tilde.size()) == m) {
    black = tr.v_tilde;
    tr.inner_width = 0;
  } else {
    const TreeDecomposition inner_td =
        make_nonredundant(restrict_to(norm, inner_graph));
    const Cut inner =
        exact_cut_bounded_td(inner_graph.graph, inner_td, m, limits);
    tr.inner_width = inner.width;
    black = inner_graph.to_parent(inner.black);
  }
  out.cut = make_cut(g, std::move(black));

  const InducedSubgraph white = induced_subgraph(g, out.cut.white);
  out.white_td = restrict_to(norm, white);
  tr.r_after = Rational(heaviest_path_weight(out.white_td),
                        static_cast<std::int64_t>(out.cut.white.size()));
  return out;
}

}  // namespace ksec
