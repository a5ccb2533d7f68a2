#include "ksec/ksection.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ksec/bounds.hpp"
#include "ksec/error.hpp"

namespace ksec {

namespace {

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
         components(g).size() == 1;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet all_vertices(int n) { return complement({}, n); }

std::vector<VertexSet> singletons(int n, int k) {
  std::vector<VertexSet> parts(static_cast<std::size_t>(k));
  for (Vertex v = 1; v <= n; ++v) parts[static_cast<std::size_t>(v - 1)] = {v};
  return parts;
}

std::vector<int> section_sizes(int n, int k) {
  std::vector<int> sizes;
  for (int i = 0; i < n % k; ++i) sizes.push_back(n / k + 1);
  for (int i = n % k; i < k; ++i) sizes.push_back(n / k);
  return sizes;
}

[[noreturn]] void violated(const std::string& what) {
  throw InvariantViolation(what);
}

void fill_tree_bounds(BoundReport& rep, const Graph& tree) {
  rep.n = tree.num_vertices();
  rep.max_degree = max_degree(tree);
  const int diam = static_cast<int>(longest_path(tree).size()) - 1;
  rep.diam = diam;
  rep.diam_star = Rational(diam + 1, rep.n);
  if (diam >= 1) {
    rep.bound_tree = bound_tree(rep.n, rep.k, diam, rep.max_degree);
    rep.bound_tree_improved =
        bound_tree_improved(rep.n, rep.k, diam, rep.max_degree).value();
  }
}

// Cuts parts of the given sizes (all but the last) off `tree` in order.
std::vector<VertexSet> run_tree_cuts(const Graph& tree,
                                     std::span<const int> sizes,
                                     const OracleLimits& limits,
                                     std::vector<DiamCutTrace>& traces) {
  const int n = tree.num_vertices();
  const Rational d0 = relative_diameter(tree);
  std::vector<VertexSet> parts;
  VertexSet remaining = all_vertices(n);
  int width_sum = 0;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const InducedSubgraph sub = induced_subgraph(tree, remaining);
    const Rational d_sub = relative_diameter(sub.graph);
    const int deg_sub = max_degree(sub.graph);
    DiamCut dc = diameter_preserving_cut(sub.graph, sizes[l], limits);
    if (static_cast<int>(dc.cut.black.size()) != sizes[l]) {
      violated("cut " + std::to_string(l) + " has the wrong size");
    }
    const Graph white = induced_subgraph(sub.graph, dc.cut.white).graph;
    if (relative_diameter(white) < d0) {
      violated("relative diameter dropped in cut " + std::to_string(l));
    }
    if (!within_diam_cut_bound(dc.cut.width, d_sub, deg_sub) ||
        !diam_cut_log_bound(d_sub, deg_sub).holds(dc.cut.width)) {
      violated("cut " + std::to_string(l) + " exceeds its width bound");
    }
    width_sum += dc.cut.width;
    VertexSet part = sub.to_parent(dc.cut.black);
    remaining = set_minus(remaining, part);
    parts.push_back(std::move(part));
    traces.push_back(std::move(dc.trace));
  }
  parts.push_back(std::move(remaining));
  if (cut_width(tree, parts) != width_sum) {
    violated("total width differs from the sum of per-cut widths");
  }
  return parts;
}

}  // namespace

std::optional<long double> BoundReport::binding() const {
  std::optional<long double> best;
  for (const auto& b : {bound_tree, bound_tree_improved, bound_td}) {
    if (b && (!best || *b < *best)) best = b;
  }
  return best;
}

long double BoundReport::approx_ratio() const {
  return k > 1 ? static_cast<long double>(achieved) / (k - 1) : 0.0L;
}

bool BoundReport::within_bounds() const {
  if (diam && *diam >= 1) {
    if (!within_bound_tree(achieved, n, k, *diam, max_degree)) return false;
    if (!ksec::bound_tree_improved(n, k, *diam, max_degree).holds(achieved)) {
      return false;
    }
  }
  if (r && t && r->num() > 0) {
    if (!ksec::bound_td(k, *t, max_degree, *r).holds(achieved)) return false;
  }
  return true;
}

TreeKSection ksection_tree(const Graph& tree, int k,
                           const OracleLimits& limits) {
  if (!is_tree(tree)) throw Error(ErrorCode::kNotATree, "ksection_tree");
  if (k < 2) {
    throw Error(ErrorCode::kKOutOfRange, "k = " + std::to_string(k) + " < 2");
  }
  const int n = tree.num_vertices();
  TreeKSection out;
  out.report.k = k;
  fill_tree_bounds(out.report, tree);
  if (k >= n) {
    out.section.parts = singletons(n, k);
  } else {
    const auto sizes = section_sizes(n, k);
    out.section.parts = run_tree_cuts(tree, sizes, limits, out.traces);
  }
  out.section.width = cut_width(tree, out.section.parts);
  if (!is_balanced(out.section.parts, n)) violated("k-section is unbalanced");
  out.report.achieved = out.section.width;
  return out;
}

PrescribedCut cut_prescribed_sizes(const Graph& tree,
                                   std::span<const int> sizes,
                                   const OracleLimits& limits) {
  if (!is_tree(tree)) throw Error(ErrorCode::kNotATree, "cut_prescribed_sizes");
  const int n = tree.num_vertices();
  long long total = 0;
  for (int s : sizes) {
    if (s <= 0) throw Error(ErrorCode::kBadParameters, "sizes must be positive");
    total += s;
  }
  if (sizes.empty() || total != n) {
    throw Error(ErrorCode::kSizesDontSum,
                "sizes sum to " + std::to_string(total) + ", n = " +
                    std::to_string(n));
  }
  PrescribedCut out;
  std::vector<DiamCutTrace> traces;
  out.parts = run_tree_cuts(tree, sizes, limits, traces);
  out.width = cut_width(tree, out.parts);
  out.report.k = static_cast<int>(sizes.size());
  fill_tree_bounds(out.report, tree);
  out.report.achieved = out.width;
  out.within_bound =
      sizes.size() == 1 ||
      within_diam_cut_bound(out.width, relative_diameter(tree),
                            out.report.max_degree,
                            static_cast<int>(sizes.size()) - 1);
  return out;
}

TdKSection ksection_td(const Graph& g, const TreeDecomposition& td, int k,
                       const OracleLimits& limits) {
  if (k < 2) {
    throw Error(ErrorCode::kKOutOfRange, "k = " + std::to_string(k) + " < 2");
  }
  const int n = g.num_vertices();
  if (td.num_vertices() != n) {
    throw Error(ErrorCode::kInvalidDecomposition,
                "decomposition and graph disagree on n");
  }
  if (const TdValidation val = validate(td, g); !val.ok()) {
    throw Error(ErrorCode::kInvalidDecomposition,
                std::string(to_string(val.failed)) + ": " + val.message);
  }
  const TreeDecomposition norm = make_nonredundant(td);
  TdKSection out;
  BoundReport& rep = out.report;
  rep.n = n;
  rep.k = k;
  rep.max_degree = max_degree(g);
  const Rational r0 = relative_heaviest_weight(norm, n);
  rep.r = r0;
  rep.t = norm.max_cluster_size();
  if (n >= 1) rep.bound_td = bound_td(k, *rep.t, rep.max_degree, r0).value();

  if (k >= n) {
    out.section.parts = singletons(n, k);
  } else {
    const auto sizes = section_sizes(n, k);
    InducedSubgraph cur = induced_subgraph(g, all_vertices(n));
    TreeDecomposition cur_td = norm;
    int width_sum = 0;
    for (int l = 0; l + 1 < k; ++l) {
      RCut rc = r_preserving_cut(cur.graph, cur_td, sizes[l], limits);
      if (static_cast<int>(rc.cut.black.size()) != sizes[l]) {
        violated("cut " + std::to_string(l) + " has the wrong size");
      }
      if (rc.trace.r_after < r0 || rc.trace.r_after < rc.trace.r) {
        violated("heaviest-path weight dropped in cut " + std::to_string(l));
      }
      const int deg_cur = max_degree(cur.graph);
      if (!r_cut_bound(rc.trace.r, rc.trace.t, deg_cur).holds(rc.cut.width)) {
        violated("cut " + std::to_string(l) + " exceeds its width bound");
      }
      width_sum += rc.cut.width;
      out.section.parts.push_back(cur.to_parent(rc.cut.black));
      // Re-root the remainder on parent ids.
      InducedSubgraph next = induced_subgraph(cur.graph, rc.cut.white);
      for (std::size_t i = 1; i < next.original.size(); ++i) {
        next.original[i] = cur.original[next.original[i]];
      }
      cur = std::move(next);
      cur_td = std::move(rc.white_td);
      out.traces.push_back(std::move(rc.trace));
    }
    out.section.parts.push_back(cur.to_parent(all_vertices(cur.graph.num_vertices())));
    if (cut_width(g, out.section.parts) != width_sum) {
      violated("total width differs from the sum of per-cut widths");
    }
  }
  out.section.width = cut_width(g, out.section.parts);
  if (!is_balanced(out.section.parts, n)) violated("k-section is unbalanced");
  rep.achieved = out.section.width;
  return out;
}

KSection recursive_bisection_baseline(const Graph& tree, int k,
                                      const OracleLimits& limits) {
  if (k < 1 || !std::has_single_bit(static_cast<unsigned>(k))) {
    throw Error(ErrorCode::kKNotPowerOfTwo, "k = " + std::to_string(k));
  }
  const int n = tree.num_vertices();
  if (k > n) {
    throw Error(ErrorCode::kKOutOfRange,
                "k = " + std::to_string(k) + " > n = " + std::to_string(n));
  }
  std::vector<VertexSet> parts{all_vertices(n)};
  while (static_cast<int>(parts.size()) < k) {
    std::vector<VertexSet> next;
    for (const VertexSet& p : parts) {
      const InducedSubgraph sub = induced_subgraph(tree, p);
      const int half = (static_cast<int>(p.size()) + 1) / 2;
      const Cut c = dp_min_size_cut_tree(sub.graph, half, limits);
      next.push_back(sub.to_parent(c.black));
      next.push_back(sub.to_parent(c.white));
    }
    parts = std::move(next);
  }
  KSection out;
  out.parts = std::move(parts);
  out.width = cut_width(tree, out.parts);
  return out;
}

}  // namespace ksec
