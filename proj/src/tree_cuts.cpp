#include "ksec/tree_cuts.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ksec/error.hpp"
#include "ksec/tree_labeling.hpp"

namespace ksec {

namespace {

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
         components(g).size() == 1;
}

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

VertexSet sorted(VertexSet s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::string_view to_string(DiamCutCase c) {
  switch (c) {
    case DiamCutCase::kDeg2: return "Deg2";
    case DiamCutCase::kCase1: return "Case1";
    case DiamCutCase::kCase2a: return "Case2a";
    case DiamCutCase::kCase2b: return "Case2b";
    case DiamCutCase::kCase3a: return "Case3a";
    case DiamCutCase::kCase3b: return "Case3b";
  }
  return "?";
}

Cut approximate_cut(const Graph& tree, Vertex v, int m) {
  const int n = tree.num_vertices();
  if (!is_tree(tree)) throw Error(ErrorCode::kNotATree, "approximate_cut");
  if (!tree.contains(v)) {
    throw Error(ErrorCode::kBadParameters, "vertex " + std::to_string(v));
  }
  if (m < 1 || m > 2 * n - 2) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(2 * n - 2) + "]");
  }
  if (m >= n - 1) {
    VertexSet black;
    for (Vertex u = 1; u <= n; ++u) {
      if (u != v) black.push_back(u);
    }
    return make_cut(tree, std::move(black));
  }
  // Root at v.
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order{v};
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  seen[v] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : tree.neighbors(order[head])) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = order[head];
      order.push_back(w);
    }
  }
  std::vector<int> size(static_cast<std::size_t>(n) + 1, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != 0) size[parent[*it]] += size[*it];
  }
  auto children = [&](Vertex x) {
    std::vector<Vertex> out;
    for (Vertex w : tree.neighbors(x)) {
      if (w != parent[x]) out.push_back(w);
    }
    return out;
  };
  // Descend to x with |D_x| > m and all children at most m.
  Vertex x = v;
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex y : children(x)) {
      if (size[y] > m) {
        x = y;
        moved = true;
        break;
      }
    }
  }
  std::vector<Vertex> chosen;
  const auto kids = children(x);
  for (Vertex y : kids) {
    if (2 * size[y] >= m) {
      chosen.push_back(y);
      break;
    }
  }
  if (chosen.empty()) {
    int total = 0;
    for (Vertex y : kids) {
      chosen.push_back(y);
      total += size[y];
      if (2 * total >= m) break;
    }
  }
  // Collect the chosen subtrees.
  std::vector<char> black_flag(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex y : chosen) black_flag[y] = 1;
  for (Vertex u : order) {
    if (parent[u] != 0 && black_flag[parent[u]]) {
      black_flag[u] = 1;
    }
  }
  VertexSet black;
  for (Vertex u = 1; u <= n; ++u) {
    if (black_flag[u]) black.push_back(u);
  }
  return make_cut(tree, std::move(black));
}

Cut exact_cut_bounded(const Graph& forest, int m, const OracleLimits& limits) {
  const int n = forest.num_vertices();
  if (m < 1 || m > n) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(n) + "]");
  }
  return dp_min_size_cut_tree(forest, m, limits);
}

DiamCut diameter_preserving_cut(const Graph& forest, int m,
                                const OracleLimits& limits) {
  const int n = forest.num_vertices();
  if (!validate_forest(forest)) {
    throw Error(ErrorCode::kNotAForest, "diameter_preserving_cut");
  }
  if (m < 1 || m > n - 1) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [1, " +
                    std::to_string(n - 1) + "]");
  }
  DiamCut out;
  DiamCutTrace& tr = out.trace;
  tr.m = m;
  tr.diam_star = relative_diameter(forest);
  tr.floor_dm = tr.diam_star.floor_times(m);

  if (max_degree(forest) <= 2) {
    // Every component is a path; lay them end to end and take a prefix.
    tr.case_tag = DiamCutCase::kDeg2;
    VertexSet black;
    for (const auto& comp : components(forest)) {
      for (Vertex u : longest_path_in_component(forest, comp.front())) {
        if (static_cast<int>(black.size()) == m) break;
        black.push_back(u);
      }
      if (static_cast<int>(black.size()) == m) break;
    }
    black = sorted(std::move(black));
    tr.m_set = black;
    tr.v_tilde = black;
    out.cut = make_cut(forest, std::move(black));
    tr.outer_width = out.cut.width;
    return out;
  }

  const Graph tree = link_components(forest);
  const PLabeling lab = p_labeling(tree);
  const CyclicLabeling& labels = lab.labels;
  const Label v = find_anchor(lab, m);
  const Label w = labels.normalize(static_cast<std::int64_t>(v) + m);
  const Label last = labels.normalize(static_cast<std::int64_t>(v) + m - 1);
  tr.anchor_label = v;
  tr.anchor = lab.vertex_of(v);
  for (Label l : labels.interval(v, last)) tr.m_set.push_back(lab.vertex_of(l));
  tr.m_set = sorted(std::move(tr.m_set));

  const PathDecomposition& dec = lab.decomposition;
  auto subtree_prime = [&](Vertex z) {
    VertexSet s = dec.subtree_of(z);
    s.erase(std::find(s.begin(), s.end(), z));
    return s;
  };
  // Approximate m~-cut in T_z with z white, mapped to original ids.
  auto split_subtree = [&](Vertex z) {
    const VertexSet& members = dec.subtree_of(z);
    const VertexSet tz_prime = subtree_prime(z);
    VertexSet in_m;
    std::set_intersection(tz_prime.begin(), tz_prime.end(), tr.m_set.begin(),
                          tr.m_set.end(), std::back_inserter(in_m));
    tr.z = z;
    tr.m_tilde = 2 * static_cast<int>(in_m.size());
    const InducedSubgraph sub = induced_subgraph(forest, members);
    const auto local_z = static_cast<Vertex>(
        std::lower_bound(members.begin(), members.end(), z) - members.begin() + 1);
    const Cut c = approximate_cut(sub.graph, local_z, tr.m_tilde);
    tr.black_z = sub.to_parent(c.black);
    tr.white_z = sub.to_parent(c.white);
    return tz_prime;
  };

  const bool v_on = labels.marked(v);
  const bool w_on = labels.marked(w);
  if (v_on && w_on) {
    tr.case_tag = DiamCutCase::kCase1;
    tr.v_tilde = tr.m_set;
  } else if (v_on && labels.marked(last)) {
    tr.case_tag = DiamCutCase::kCase2a;
    tr.v_tilde = tr.m_set;
  } else if (v_on) {
    tr.case_tag = DiamCutCase::kCase2b;
    const Vertex z = dec.path_vertex_of[lab.vertex_of(w)];
    const VertexSet tz_prime = split_subtree(z);
    tr.v_tilde = set_union(set_minus(tr.m_set, tz_prime), tr.black_z);
  } else {
    const Vertex z = dec.path_vertex_of[lab.vertex_of(v)];
    const VertexSet tz_prime = split_subtree(z);
    if (z == lab.vertex_of(w)) {
      tr.case_tag = DiamCutCase::kCase3a;
      tr.v_tilde = tr.black_z;
    } else {
      tr.case_tag = DiamCutCase::kCase3b;
      VertexSet drop = tz_prime;
      drop.insert(std::lower_bound(drop.begin(), drop.end(), z), z);
      tr.v_tilde = set_union(set_minus(tr.m_set, drop), tr.black_z);
      tr.v_tilde = set_union(tr.v_tilde, VertexSet{lab.vertex_of(w)});
    }
  }

  tr.outer_width = boundary_width(forest, tr.v_tilde);
  VertexSet black;
  if (static_cast<int>(tr.v_tilde.size()) == m) {
    black = tr.v_tilde;
  } else {
    const InducedSubgraph sub = induced_subgraph(forest, tr.v_tilde);
    const Cut inner = exact_cut_bounded(sub.graph, m, limits);
    black = sub.to_parent(inner.black);
  }
  out.cut = make_cut(forest, std::move(black));
  {
    const InducedSubgraph sub = induced_subgraph(forest, tr.v_tilde);
    VertexSet local;
    for (Vertex u : out.cut.black) {
      local.push_back(static_cast<Vertex>(
          std::lower_bound(tr.v_tilde.begin(), tr.v_tilde.end(), u) -
          tr.v_tilde.begin() + 1));
    }
    tr.inner_width = boundary_width(sub.graph, local);
  }
  return out;
}

}  // namespace ksec
