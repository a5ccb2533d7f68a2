#include "ksec/instances.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "ksec/error.hpp"

namespace ksec {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kBadParameters, what);
}

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph build(int n, const EdgeList& edges) { return Graph::from_edges(n, edges); }

// perm[v] is the new id of v; perm[0] unused.
std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  rng.shuffle(perm);
  perm.insert(perm.begin(), 0);
  return perm;
}

void relabel(EdgeList& edges, const std::vector<Vertex>& perm) {
  for (auto& [u, v] : edges) {
    u = perm[u];
    v = perm[v];
  }
}

EdgeList dary_edges(int arity, int height, int& n_out) {
  if (arity < 1 || height < 0) bad("perfect_dary needs arity >= 1, height >= 0");
  long long count = 1, level = 1;
  for (int h = 0; h < height; ++h) {
    level *= arity;
    count += level;
    if (count > 50'000'000) bad("perfect_dary instance too large");
  }
  n_out = static_cast<int>(count);
  EdgeList edges;
  for (Vertex c = 2; c <= n_out; ++c) {
    edges.emplace_back(static_cast<Vertex>((c - 2) / arity + 1), c);
  }
  return edges;
}

EdgeList prufer_tree(int n, Rng& rng) {
  EdgeList edges;
  if (n == 2) edges.emplace_back(1, 2);
  if (n <= 2) return edges;
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<Vertex>(rng.uniform_int(1, n));
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

Instance random_tree_maxdeg(const GeneratorSpec& spec) {
  const int n = spec.n;
  const int cap = spec.max_degree;
  if (n < 1) bad("random_tree_maxdeg needs n >= 1");
  if ((n >= 3 && cap < 2) || (n == 2 && cap < 1)) {
    bad("random_tree_maxdeg: degree cap too small for n");
  }
  Rng rng(spec.seed);
  EdgeList edges;
  if (cap >= n - 1) {
    edges = prufer_tree(n, rng);
  } else {
    std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> open{1};
    for (Vertex v = 2; v <= n; ++v) {
      const std::size_t idx = rng.below(open.size());
      const Vertex u = open[idx];
      edges.emplace_back(u, v);
      if (++degree[u] == cap) {
        open[idx] = open.back();
        open.pop_back();
      }
      if (++degree[v] < cap) open.push_back(v);
    }
  }
  relabel(edges, random_permutation(n, rng));
  return {build(n, edges), std::nullopt};
}

Instance random_partial_ktree(const GeneratorSpec& spec) {
  const int n = spec.n;
  const int t = spec.t;
  if (t < 2 || n < t) bad("random_partial_ktree needs 2 <= t <= n");
  constexpr int kKeepPermille = 600;
  Rng rng(spec.seed);
  std::set<std::pair<Vertex, Vertex>> edge_set;
  auto maybe_edge = [&](Vertex a, Vertex b) {
    if (rng.below(1000) < kKeepPermille) {
      edge_set.emplace(std::min(a, b), std::max(a, b));
    }
  };
  std::vector<VertexSet> bags;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;
  VertexSet first;
  for (Vertex v = 1; v <= t; ++v) first.push_back(v);
  for (Vertex a = 1; a <= t; ++a) {
    for (Vertex b = a + 1; b <= t; ++b) maybe_edge(a, b);
  }
  bags.push_back(first);
  for (Vertex v = t + 1; v <= n; ++v) {
    const auto parent = static_cast<NodeId>(rng.below(bags.size()));
    VertexSet bag = bags[parent];
    bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(rng.below(bag.size())));
    for (Vertex u : bag) maybe_edge(u, v);
    bag.push_back(v);
    tree_edges.emplace_back(parent, static_cast<NodeId>(bags.size()));
    bags.push_back(std::move(bag));
  }
  const auto perm = random_permutation(n, rng);
  EdgeList edges(edge_set.begin(), edge_set.end());
  relabel(edges, perm);
  for (auto& bag : bags) {
    for (auto& v : bag) v = perm[v];
  }
  return {build(n, edges), TreeDecomposition(n, std::move(bags),
                                             std::move(tree_edges))};
}

// AHU encoding of the tree rooted at `root`.
std::string rooted_code(const Graph& g, Vertex root, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex c : g.neighbors(root)) {
    if (c != parent) kids.push_back(rooted_code(g, c, root));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::vector<Vertex> centers(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> degree(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> layer;
  for (Vertex v = 1; v <= n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex u : g.neighbors(v)) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::string canonical_code(const Graph& g) {
  std::string best;
  for (Vertex c : centers(g)) {
    std::string code = rooted_code(g, c, 0);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& s : s_) s = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Largest multiple of bound that fits, minus one; draws above it are redone.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

int Rng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  return static_cast<int>(lo + static_cast<std::int64_t>(below(span)));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kStar: return "star";
    case Family::kCaterpillar: return "caterpillar";
    case Family::kSpider: return "spider";
    case Family::kPerfectDary: return "perfect_dary";
    case Family::kAdversarialTernaryPath: return "adversarial_ternary_path";
    case Family::kRandomTreeMaxdeg: return "random_tree_maxdeg";
    case Family::kRandomPartialKtree: return "random_partial_ktree";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::kPath, Family::kStar, Family::kCaterpillar,
                   Family::kSpider, Family::kPerfectDary,
                   Family::kAdversarialTernaryPath, Family::kRandomTreeMaxdeg,
                   Family::kRandomPartialKtree}) {
    if (to_string(f) == name) return f;
  }
  bad("unknown family '" + std::string(name) + "'");
}

int ternary_tree_size(int height) {
  int n = 0;
  dary_edges(3, height, n);
  return n;
}

Instance generate(const GeneratorSpec& spec) {
  EdgeList edges;
  int n = spec.n;
  switch (spec.family) {
    case Family::kPath:
      if (n < 1) bad("path needs n >= 1");
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::kStar:
      if (n < 1) bad("star needs n >= 1");
      for (Vertex v = 2; v <= n; ++v) edges.emplace_back(1, v);
      break;
    case Family::kCaterpillar: {
      if (spec.n < 1 || spec.arity < 0) bad("caterpillar needs n >= 1, arity >= 0");
      n = spec.n * (spec.arity + 1);
      for (Vertex v = 1; v < spec.n; ++v) edges.emplace_back(v, v + 1);
      Vertex next = spec.n + 1;
      for (Vertex s = 1; s <= spec.n; ++s) {
        for (int l = 0; l < spec.arity; ++l) edges.emplace_back(s, next++);
      }
      break;
    }
    case Family::kSpider: {
      if (spec.arity < 1 || spec.height < 1) {
        bad("spider needs arity >= 1, height >= 1");
      }
      n = 1 + spec.arity * spec.height;
      Vertex next = 2;
      for (int leg = 0; leg < spec.arity; ++leg) {
        Vertex prev = 1;
        for (int i = 0; i < spec.height; ++i) {
          edges.emplace_back(prev, next);
          prev = next++;
        }
      }
      break;
    }
    case Family::kPerfectDary:
      edges = dary_edges(spec.arity, spec.height, n);
      break;
    case Family::kAdversarialTernaryPath: {
      int half = 0;
      edges = dary_edges(3, spec.height, half);
      n = 2 * half;
      for (Vertex v = half + 1; v < n; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(1, half + 1);
      break;
    }
    case Family::kRandomTreeMaxdeg:
      return random_tree_maxdeg(spec);
    case Family::kRandomPartialKtree:
      return random_partial_ktree(spec);
  }
  return {build(n, edges), std::nullopt};
}

TreeDecomposition tree_decomposition_of_tree(const Graph& tree) {
  const int n = tree.num_vertices();
  if (n < 1 || tree.num_edges() != n - 1 || components(tree).size() != 1) {
    throw Error(ErrorCode::kNotATree, "tree_decomposition_of_tree");
  }
  std::vector<VertexSet> clusters(static_cast<std::size_t>(n));
  clusters[0] = {1};
  std::vector<Vertex> stack{1};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  seen[1] = true;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : tree.neighbors(v)) {
      if (seen[c]) continue;
      seen[c] = true;
      clusters[c - 1] = {std::min(v, c), std::max(v, c)};
      stack.push_back(c);
    }
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const Edge& e : tree.edges()) edges.emplace_back(e.u - 1, e.v - 1);
  return TreeDecomposition(n, std::move(clusters), std::move(edges));
}

std::vector<Graph> all_free_trees(int n) {
  if (n < 1) return {};
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> found;
    for (const Graph& g : level) {
      for (Vertex v = 1; v < size; ++v) {
        std::vector<Edge> edges = g.edges();
        edges.push_back({v, static_cast<Vertex>(size)});
        Graph grown = Graph::from_edges(size, edges);
        found.try_emplace(canonical_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, g] : found) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace ksec
