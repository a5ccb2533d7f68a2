#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace ksec::testing {

namespace {

std::vector<int> bfs_dist(const Graph& g, Vertex s) {
  std::vector<int> d(static_cast<std::size_t>(g.num_vertices()) + 1, -1);
  std::deque<Vertex> q{s};
  d[s] = 0;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (d[u] < 0) {
        d[u] = d[v] + 1;
        q.push_back(u);
      }
    }
  }
  return d;
}

std::vector<std::pair<Vertex, Vertex>> tree_edges_attach(Rng& rng, int n,
                                                         int max_deg,
                                                         Vertex offset) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 2; v <= n; ++v) {
    Vertex u;
    do {
      u = static_cast<Vertex>(rng.uniform_int(1, v - 1));
    } while (deg[u] >= max_deg);
    ++deg[u];
    ++deg[v];
    edges.emplace_back(u + offset, v + offset);
  }
  return edges;
}

}  // namespace

Graph random_tree(Rng& rng, int n, int max_deg) {
  return random_forest(rng, n, max_deg, 1);
}

Graph random_forest(Rng& rng, int n, int max_deg, int max_components) {
  const int comps = std::min(n, rng.uniform_int(1, std::max(1, max_components)));
  // Split n into `comps` positive sizes.
  std::vector<int> cuts;
  for (int i = 1; i < n; ++i) cuts.push_back(i);
  rng.shuffle(cuts);
  cuts.resize(static_cast<std::size_t>(comps - 1));
  cuts.push_back(0);
  cuts.push_back(n);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const int size = cuts[c + 1] - cuts[c];
    auto part = tree_edges_attach(rng, size, max_deg, cuts[c]);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) perm[i] = i;
  std::vector<Vertex> tail(perm.begin() + 1, perm.end());
  rng.shuffle(tail);
  std::copy(tail.begin(), tail.end(), perm.begin() + 1);
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
  return Graph::from_edges(n, edges);
}

GraphWithTd random_partial_ktree(Rng& rng, int n, int t, bool redundant) {
  std::set<std::pair<Vertex, Vertex>> es;
  std::vector<VertexSet> bags;
  std::vector<std::pair<NodeId, NodeId>> tree;
  VertexSet first;
  for (Vertex v = 1; v <= std::min(n, t); ++v) first.push_back(v);
  for (std::size_t a = 0; a < first.size(); ++a) {
    for (std::size_t b = a + 1; b < first.size(); ++b) {
      if (rng.below(2) == 0) es.emplace(first[a], first[b]);
    }
  }
  bags.push_back(first);
  for (Vertex v = t + 1; v <= n; ++v) {
    const auto p = static_cast<NodeId>(rng.below(bags.size()));
    VertexSet bag = bags[p];
    bag.erase(bag.begin() + static_cast<long>(rng.below(bag.size())));
    for (Vertex u : bag) {
      if (rng.below(2) == 0) es.emplace(std::min(u, v), std::max(u, v));
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    tree.emplace_back(p, static_cast<NodeId>(bags.size()));
    bags.push_back(bag);
  }
  if (redundant) {
    const int extra = rng.uniform_int(1, std::max(1, n / 3));
    for (int e = 0; e < extra; ++e) {
      const auto p = static_cast<NodeId>(rng.below(bags.size()));
      VertexSet bag = bags[p];
      if (bag.size() > 1 && rng.below(2) == 0) {
        bag.erase(bag.begin() + static_cast<long>(rng.below(bag.size())));
      }
      tree.emplace_back(p, static_cast<NodeId>(bags.size()));
      bags.push_back(bag);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges(es.begin(), es.end());
  return {Graph::from_edges(n, edges),
          TreeDecomposition(n, std::move(bags), std::move(tree))};
}

int brute_min_cut(const Graph& g, int m) {
  const int n = g.num_vertices();
  if (n > 22) throw std::invalid_argument("brute_min_cut: n too large");
  int best = -1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    int w = 0;
    for (const Edge& e : g.edges()) {
      w += ((mask >> (e.u - 1)) & 1u) != ((mask >> (e.v - 1)) & 1u);
    }
    if (best < 0 || w < best) best = w;
  }
  return best;
}

int bfs_diameter(const Graph& tree) {
  int best = 0;
  for (Vertex s = 1; s <= tree.num_vertices(); ++s) {
    for (int d : bfs_dist(tree, s)) best = std::max(best, d);
  }
  return best;
}

Rational naive_relative_diameter(const Graph& forest) {
  const int n = forest.num_vertices();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  std::int64_t total = 0;
  for (Vertex s = 1; s <= n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex u : forest.neighbors(members[i])) {
        if (comp[u] < 0) {
          comp[u] = s;
          members.push_back(u);
        }
      }
    }
    int diam = 0;
    for (Vertex a : members) {
      const auto d = bfs_dist(forest, a);
      for (Vertex b : members) diam = std::max(diam, d[b]);
    }
    total += diam + 1;
  }
  return Rational(total, n);
}

int naive_distance(const CyclicLabeling& lab, Label x, Label y) {
  const int n = lab.size();
  int count = 0;
  Label u = lab.normalize(x);
  const Label target = lab.normalize(y);
  while (u != target) {
    count += lab.marked(u) ? 1 : 0;
    u = u == n ? 1 : u + 1;
  }
  return count;
}

std::vector<NodeId> tree_path(const TreeDecomposition& td, NodeId i,
                              NodeId j) {
  std::vector<NodeId> parent(static_cast<std::size_t>(td.num_nodes()), -2);
  std::deque<NodeId> q{i};
  parent[i] = -1;
  while (!q.empty()) {
    const NodeId a = q.front();
    q.pop_front();
    for (NodeId b : td.tree_neighbors(a)) {
      if (parent[b] == -2) {
        parent[b] = a;
        q.push_back(b);
      }
    }
  }
  std::vector<NodeId> path;
  for (NodeId a = j; a != -1; a = parent[a]) path.push_back(a);
  std::reverse(path.begin(), path.end());
  return path;
}

bool naive_validate(const TreeDecomposition& td, const Graph& g) {
  if (!td.tree_is_tree()) return false;
  auto in = [&](NodeId i, Vertex v) {
    const auto& c = td.cluster(i);
    return std::find(c.begin(), c.end(), v) != c.end();
  };
  for (Vertex v = 1; v <= g.num_vertices(); ++v) {
    bool found = false;
    for (NodeId i = 0; i < td.num_nodes(); ++i) found = found || in(i, v);
    if (!found) return false;
  }
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (NodeId i = 0; i < td.num_nodes(); ++i) {
      found = found || (in(i, e.u) && in(i, e.v));
    }
    if (!found) return false;
  }
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    for (NodeId j = i + 1; j < td.num_nodes(); ++j) {
      const auto path = tree_path(td, i, j);
      for (Vertex v : td.cluster(i)) {
        if (!in(j, v)) continue;
        for (NodeId h : path) {
          if (!in(h, v)) return false;
        }
      }
    }
  }
  return true;
}

int brute_heaviest_weight(const TreeDecomposition& td) {
  int best = 0;
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    for (NodeId j = i; j < td.num_nodes(); ++j) {
      std::set<Vertex> u;
      for (NodeId h : tree_path(td, i, j)) {
        u.insert(td.cluster(h).begin(), td.cluster(h).end());
      }
      best = std::max(best, static_cast<int>(u.size()));
    }
  }
  return best;
}

int naive_cut_width(const Graph& g, const std::vector<VertexSet>& parts) {
  std::map<Vertex, std::size_t> owner;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (Vertex v : parts[p]) owner[v] = p;
  }
  int w = 0;
  for (const Edge& e : g.edges()) w += owner.at(e.u) != owner.at(e.v);
  return w;
}

bool is_partition(const std::vector<VertexSet>& parts, int n) {
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : parts) {
    for (Vertex v : p) {
      if (v < 1 || v > n || seen[v]++) return false;
    }
  }
  return std::all_of(seen.begin() + 1, seen.end(), [](int s) { return s == 1; });
}

Graph induced_naive(const Graph& g, const VertexSet& keep) {
  std::map<Vertex, Vertex> id;
  for (Vertex v : keep) id.emplace(v, static_cast<Vertex>(id.size() + 1));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Edge& e : g.edges()) {
    if (id.count(e.u) && id.count(e.v)) edges.emplace_back(id[e.u], id[e.v]);
  }
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

}  // namespace ksec::testing
