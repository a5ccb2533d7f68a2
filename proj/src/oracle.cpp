#include "ksec/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "ksec/error.hpp"

namespace ksec {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

void check_memory(std::int64_t ints, const OracleLimits& limits,
                  const char* what) {
  const std::int64_t bytes = ints * static_cast<std::int64_t>(sizeof(int));
  if (bytes > limits.max_memory_mb * 1024 * 1024) {
    throw Error(ErrorCode::kResourceLimit,
                std::string(what) + " needs about " +
                    std::to_string(bytes >> 20) + " MB, limit " +
                    std::to_string(limits.max_memory_mb) + " MB");
  }
}

// out[a + b] = min(left[a] + right[b]), truncated to `cap` + 1 entries.
std::vector<int> min_plus(const std::vector<int>& left,
                          const std::vector<int>& right, int cap) {
  const int size = std::min<int>(
      cap, static_cast<int>(left.size() + right.size()) - 2);
  std::vector<int> out(static_cast<std::size_t>(size) + 1, kInf);
  for (int a = 0; a < static_cast<int>(left.size()); ++a) {
    if (left[a] >= kInf) continue;
    const int limit = std::min<int>(static_cast<int>(right.size()) - 1, size - a);
    for (int b = 0; b <= limit; ++b) {
      if (right[b] >= kInf) continue;
      out[a + b] = std::min(out[a + b], left[a] + right[b]);
    }
  }
  return out;
}

// Finds b with left[c - b] + right[b] == target.
int split_point(const std::vector<int>& left, const std::vector<int>& right,
                int c, int target) {
  for (int b = 0; b < static_cast<int>(right.size()) && b <= c; ++b) {
    const int a = c - b;
    if (a >= static_cast<int>(left.size())) continue;
    if (left[a] < kInf && right[b] < kInf && left[a] + right[b] == target) {
      return b;
    }
  }
  throw Error(ErrorCode::kBadParameters, "DP backtrack failed");
}

Cut finish_cut(const Graph& g, VertexSet black, bool flip) {
  std::sort(black.begin(), black.end());
  if (flip) black = complement(black, g.num_vertices());
  return make_cut(g, std::move(black));
}

}  // namespace

std::int64_t default_memory_limit_mb() {
  if (const char* env = std::getenv("KSEC_MAX_MEM_MB")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2048;
}

// ---------------------------------------------------------------------------
// Brute force.

namespace {

struct BruteSearch {
  const Graph& g;
  int n;
  int k;
  int floor_size;
  int big_parts;  // parts of size floor + 1
  std::vector<int> part;  // by vertex
  std::vector<int> sizes;
  int used = 0;
  int at_ceiling = 0;
  int best = kInf;
  std::vector<int> best_part;

  void run(Vertex v, int width) {
    if (width >= best) return;
    if (v > n) {
      for (int s : sizes) {
        if (s < floor_size) return;
      }
      best = width;
      best_part = part;
      return;
    }
    // Parts are opened in order, which removes the k! relabelings.
    const int options = std::min(used + 1, k);
    for (int p = 0; p < options; ++p) {
      const int grown = sizes[p] + 1;
      const bool becomes_big = grown == floor_size + 1;
      if (grown > floor_size + 1) continue;
      if (becomes_big && at_ceiling == big_parts) continue;
      int extra = 0;
      for (Vertex w : g.neighbors(v)) {
        if (w < v && part[w] != p) ++extra;
      }
      const bool opened = p == used;
      part[v] = p;
      ++sizes[p];
      if (becomes_big) ++at_ceiling;
      if (opened) ++used;
      run(v + 1, width + extra);
      if (opened) --used;
      if (becomes_big) --at_ceiling;
      --sizes[p];
      part[v] = -1;
    }
  }
};

}  // namespace

KSection brute_min_ksection(const Graph& g, int k, const OracleLimits& limits) {
  const int n = g.num_vertices();
  if (k < 1) throw Error(ErrorCode::kKOutOfRange, "k must be positive");
  if (n > limits.max_brute_vertices) {
    throw Error(ErrorCode::kTooLarge,
                "brute force limited to n <= " +
                    std::to_string(limits.max_brute_vertices));
  }
  BruteSearch search{g, n, k, n / k, n % k, {}, {}, 0, 0, kInf, {}};
  search.part.assign(static_cast<std::size_t>(n) + 1, -1);
  search.sizes.assign(static_cast<std::size_t>(k), 0);
  search.run(1, 0);
  KSection out;
  out.parts.assign(static_cast<std::size_t>(k), {});
  for (Vertex v = 1; v <= n; ++v) {
    out.parts[static_cast<std::size_t>(search.best_part[v])].push_back(v);
  }
  out.width = cut_width(g, out.parts);
  return out;
}

// ---------------------------------------------------------------------------
// Tree DP.

Cut dp_min_size_cut_tree(const Graph& forest, int m,
                         const OracleLimits& limits) {
  const int n = forest.num_vertices();
  if (m < 0 || m > n) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [0, " +
                    std::to_string(n) + "]");
  }
  if (!validate_forest(forest)) {
    throw Error(ErrorCode::kNotAForest, "tree DP needs a forest");
  }
  if (m == 0) return make_cut(forest, {});
  if (m == n) return make_cut(forest, complement({}, n));
  const bool flip = m > n - m;
  const int mm = flip ? n - m : m;

  // Root every component at its smallest vertex; children ascending.
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Vertex> order;
  std::vector<Vertex> roots;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex r = 1; r <= n; ++r) {
    if (seen[r]) continue;
    roots.push_back(r);
    seen[r] = 1;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      const Vertex u = order[head++];
      for (Vertex w : forest.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = u;
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(static_cast<std::size_t>(n) + 1, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != 0) size[parent[*it]] += size[*it];
  }
  std::int64_t cells = 0;
  for (Vertex v = 1; v <= n; ++v) cells += 2 * (std::min(size[v], mm) + 1);
  check_memory(cells, limits, "tree DP");

  // table[v][s] = best width inside the subtree of v by black count, v on
  // side s.
  std::vector<std::array<std::vector<int>, 2>> table(
      static_cast<std::size_t>(n) + 1);
  auto child_best = [&](Vertex u, int s) {
    const auto& t = table[u];
    std::vector<int> out(t[0].size(), kInf);
    for (std::size_t b = 0; b < out.size(); ++b) {
      const int same = t[s][b];
      const int other = t[1 - s][b] < kInf ? t[1 - s][b] + 1 : kInf;
      out[b] = std::min(same, other);
    }
    return out;
  };
  auto initial = [&](int s) {
    std::vector<int> v(2, kInf);
    v[static_cast<std::size_t>(s)] = 0;
    return v;
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const int cap = std::min(size[v], mm);
    for (int s = 0; s < 2; ++s) {
      std::vector<int> cur = initial(s);
      for (Vertex u : forest.neighbors(v)) {
        if (parent[u] != v) continue;
        cur = min_plus(cur, child_best(u, s), cap);
      }
      cur.resize(static_cast<std::size_t>(cap) + 1, kInf);
      table[v][static_cast<std::size_t>(s)] = std::move(cur);
    }
  }
  // Combine components.
  auto root_best = [&](Vertex r) {
    const auto& t = table[r];
    std::vector<int> out(t[0].size());
    for (std::size_t c = 0; c < out.size(); ++c) out[c] = std::min(t[0][c], t[1][c]);
    return out;
  };
  std::vector<std::vector<int>> prefix;
  prefix.push_back({0});
  for (Vertex r : roots) prefix.push_back(min_plus(prefix.back(), root_best(r), mm));
  if (static_cast<int>(prefix.back().size()) <= mm || prefix.back()[mm] >= kInf) {
    throw Error(ErrorCode::kBadParameters, "tree DP found no cut");
  }

  // Backtrack.
  std::vector<int> side(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  int c = mm;
  for (std::size_t i = roots.size(); i-- > 0;) {
    const Vertex r = roots[i];
    const auto best = root_best(r);
    const int b = split_point(prefix[i], best, c, prefix[i + 1][c]);
    count[r] = b;
    side[r] = table[r][0][b] <= table[r][1][b] ? 0 : 1;
    c -= b;
  }
  for (Vertex v : order) {
    const int s = side[v];
    std::vector<Vertex> kids;
    for (Vertex u : forest.neighbors(v)) {
      if (parent[u] == v) kids.push_back(u);
    }
    if (kids.empty()) continue;
    const int cap = std::min(size[v], mm);
    std::vector<std::vector<int>> pre;
    std::vector<std::vector<int>> contrib;
    pre.push_back(initial(s));
    for (Vertex u : kids) {
      contrib.push_back(child_best(u, s));
      pre.push_back(min_plus(pre.back(), contrib.back(), cap));
    }
    int cv = count[v];
    for (std::size_t i = kids.size(); i-- > 0;) {
      const Vertex u = kids[i];
      const int b = split_point(pre[i], contrib[i], cv, pre[i + 1][cv]);
      count[u] = b;
      side[u] = table[u][s][b] <= (table[u][1 - s][b] < kInf
                                       ? table[u][1 - s][b] + 1
                                       : kInf)
                    ? s
                    : 1 - s;
      cv -= b;
    }
  }
  VertexSet black;
  for (Vertex v = 1; v <= n; ++v) {
    if (side[v] == 1) black.push_back(v);
  }
  return finish_cut(forest, std::move(black), flip);
}

// ---------------------------------------------------------------------------
// Tree-decomposition DP.

namespace {

struct TdNode {
  VertexSet cluster;
  std::uint32_t owned_mask = 0;
  std::vector<std::pair<int, int>> owned_edges;  // bit positions
  std::vector<NodeId> children;
  int cap = 0;
  std::vector<int> table;  // [mask * (cap + 1) + count]
};

// Bit positions in `from` of the vertices shared with `other`, and a map from
// masks over `from` to compact keys over the shared vertices.
std::vector<std::uint32_t> key_map(const VertexSet& from,
                                   const VertexSet& other) {
  std::vector<int> shared_bits;
  for (std::size_t b = 0; b < from.size(); ++b) {
    if (std::binary_search(other.begin(), other.end(), from[b])) {
      shared_bits.push_back(static_cast<int>(b));
    }
  }
  std::vector<std::uint32_t> key(std::size_t{1} << from.size(), 0);
  for (std::uint32_t mask = 0; mask < key.size(); ++mask) {
    std::uint32_t k = 0;
    for (std::size_t q = 0; q < shared_bits.size(); ++q) {
      if (mask >> shared_bits[q] & 1U) k |= 1U << q;
    }
    key[mask] = k;
  }
  return key;
}

}  // namespace

Cut dp_min_size_cut_td(const Graph& g, const TreeDecomposition& td, int m,
                       const OracleLimits& limits) {
  const int n = g.num_vertices();
  if (m < 0 || m > n) {
    throw Error(ErrorCode::kMOutOfRange,
                "m = " + std::to_string(m) + " outside [0, " +
                    std::to_string(n) + "]");
  }
  if (td.num_vertices() != n || td.num_nodes() == 0 || !td.tree_is_tree()) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "decomposition does not match the graph");
  }
  if (td.width() > limits.max_td_width) {
    throw Error(ErrorCode::kWidthTooLarge,
                "width " + std::to_string(td.width()) + " exceeds limit " +
                    std::to_string(limits.max_td_width));
  }
  if (m == 0) return make_cut(g, {});
  if (m == n) return make_cut(g, complement({}, n));
  const bool flip = m > n - m;
  const int mm = flip ? n - m : m;

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

  std::vector<TdNode> node(static_cast<std::size_t>(nodes));
  std::vector<NodeId> owner(static_cast<std::size_t>(n) + 1, -1);
  std::vector<char> edge_owned(g.edges().size(), 0);
  const auto& edges = g.edges();
  for (NodeId i : order) {
    TdNode& nd = node[i];
    nd.cluster = td.cluster(i);
    if (parent[i] >= 0) node[parent[i]].children.push_back(i);
    for (std::size_t b = 0; b < nd.cluster.size(); ++b) {
      const Vertex v = nd.cluster[b];
      if (owner[v] < 0) {
        owner[v] = i;
        nd.owned_mask |= 1U << b;
      }
      for (std::size_t b2 = b + 1; b2 < nd.cluster.size(); ++b2) {
        const Edge e{v, nd.cluster[b2]};
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e) continue;
        const auto idx = static_cast<std::size_t>(it - edges.begin());
        if (edge_owned[idx]) continue;
        edge_owned[idx] = 1;
        nd.owned_edges.emplace_back(static_cast<int>(b), static_cast<int>(b2));
      }
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (owner[v] < 0) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "vertex " + std::to_string(v) + " in no cluster");
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!edge_owned[e]) {
      throw Error(ErrorCode::kInvalidDecomposition,
                  "edge {" + std::to_string(edges[e].u) + "," +
                      std::to_string(edges[e].v) + "} in no cluster");
    }
  }

  std::vector<int> owned_below(static_cast<std::size_t>(nodes), 0);
  std::int64_t cells = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId i = *it;
    owned_below[i] += std::popcount(node[i].owned_mask);
    if (parent[i] >= 0) owned_below[parent[i]] += owned_below[i];
    node[i].cap = std::min(owned_below[i], mm);
    cells += (std::int64_t{1} << node[i].cluster.size()) * (node[i].cap + 1);
  }
  check_memory(cells, limits, "decomposition DP");

  auto base_row = [&](const TdNode& nd, std::uint32_t mask) {
    int cost = 0;
    for (auto [a, b] : nd.owned_edges) {
      if ((mask >> a & 1U) != (mask >> b & 1U)) ++cost;
    }
    const int cnt = std::popcount(mask & nd.owned_mask);
    std::vector<int> row(static_cast<std::size_t>(cnt) + 1, kInf);
    if (cnt <= mm) {
      row[static_cast<std::size_t>(cnt)] = cost;
    } else {
      row.assign(1, kInf);
    }
    return row;
  };
  // Message from child c to its parent for one parent key.
  auto message = [&](const TdNode& child,
                     const std::vector<std::uint32_t>& child_key,
                     std::uint32_t key) {
    const int width = child.cap + 1;
    std::vector<int> out(static_cast<std::size_t>(width), kInf);
    for (std::uint32_t cm = 0; cm < child_key.size(); ++cm) {
      if (child_key[cm] != key) continue;
      const int* row = &child.table[static_cast<std::size_t>(cm) * width];
      for (int b = 0; b < width; ++b) out[b] = std::min(out[b], row[b]);
    }
    return out;
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    TdNode& nd = node[*it];
    const std::uint32_t masks = 1U << nd.cluster.size();
    const int width = nd.cap + 1;
    // Messages per child, indexed by key.
    std::vector<std::vector<std::uint32_t>> parent_keys;
    std::vector<std::vector<std::vector<int>>> msgs;
    for (NodeId c : nd.children) {
      const TdNode& child = node[c];
      auto pk = key_map(nd.cluster, child.cluster);
      auto ck = key_map(child.cluster, nd.cluster);
      std::uint32_t keys = 0;
      for (auto k : ck) keys = std::max(keys, k + 1);
      const int cw = child.cap + 1;
      std::vector<std::vector<int>> by_key(
          keys, std::vector<int>(static_cast<std::size_t>(cw), kInf));
      for (std::uint32_t cm = 0; cm < ck.size(); ++cm) {
        auto& out = by_key[ck[cm]];
        const int* row = &child.table[static_cast<std::size_t>(cm) * cw];
        for (int b = 0; b < cw; ++b) out[b] = std::min(out[b], row[b]);
      }
      parent_keys.push_back(std::move(pk));
      msgs.push_back(std::move(by_key));
    }
    nd.table.assign(static_cast<std::size_t>(masks) * width, kInf);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      std::vector<int> cur = base_row(nd, mask);
      for (std::size_t q = 0; q < nd.children.size(); ++q) {
        cur = min_plus(cur, msgs[q][parent_keys[q][mask]], nd.cap);
      }
      for (int c = 0; c < width && c < static_cast<int>(cur.size()); ++c) {
        nd.table[static_cast<std::size_t>(mask) * width + c] = cur[c];
      }
    }
  }

  const TdNode& root = node[0];
  const int root_width = root.cap + 1;
  if (root.cap < mm) throw Error(ErrorCode::kBadParameters, "DP root too small");
  std::uint32_t best_mask = 0;
  int best = kInf;
  for (std::uint32_t mask = 0; mask < (1U << root.cluster.size()); ++mask) {
    const int val = root.table[static_cast<std::size_t>(mask) * root_width + mm];
    if (val < best) {
      best = val;
      best_mask = mask;
    }
  }
  if (best >= kInf) throw Error(ErrorCode::kBadParameters, "DP found no cut");

  std::vector<std::uint32_t> chosen_mask(static_cast<std::size_t>(nodes), 0);
  std::vector<int> chosen_count(static_cast<std::size_t>(nodes), 0);
  chosen_mask[0] = best_mask;
  chosen_count[0] = mm;
  for (NodeId i : order) {
    const TdNode& nd = node[i];
    const std::uint32_t mask = chosen_mask[i];
    std::vector<std::vector<int>> pre{base_row(nd, mask)};
    std::vector<std::vector<int>> contrib;
    std::vector<std::vector<std::uint32_t>> child_keys;
    std::vector<std::uint32_t> wanted;
    for (NodeId c : nd.children) {
      const auto pk = key_map(nd.cluster, node[c].cluster);
      child_keys.push_back(key_map(node[c].cluster, nd.cluster));
      wanted.push_back(pk[mask]);
      contrib.push_back(message(node[c], child_keys.back(), pk[mask]));
      pre.push_back(min_plus(pre.back(), contrib.back(), nd.cap));
    }
    int cnt = chosen_count[i];
    for (std::size_t q = nd.children.size(); q-- > 0;) {
      const NodeId c = nd.children[q];
      const int b = split_point(pre[q], contrib[q], cnt, pre[q + 1][cnt]);
      const TdNode& child = node[c];
      const int cw = child.cap + 1;
      std::uint32_t pick = 0;
      bool found = false;
      for (std::uint32_t cm = 0; cm < child_keys[q].size(); ++cm) {
        if (child_keys[q][cm] != wanted[q]) continue;
        if (child.table[static_cast<std::size_t>(cm) * cw + b] == contrib[q][b]) {
          pick = cm;
          found = true;
          break;
        }
      }
      if (!found) throw Error(ErrorCode::kBadParameters, "DP backtrack failed");
      chosen_mask[c] = pick;
      chosen_count[c] = b;
      cnt -= b;
    }
  }

  VertexSet black;
  for (Vertex v = 1; v <= n; ++v) {
    const NodeId i = owner[v];
    const auto& cl = node[i].cluster;
    const auto b = std::lower_bound(cl.begin(), cl.end(), v) - cl.begin();
    if (chosen_mask[i] >> b & 1U) black.push_back(v);
  }
  return finish_cut(g, std::move(black), flip);
}

}  // namespace ksec
