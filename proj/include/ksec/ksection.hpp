#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ksec/graph.hpp"
#include "ksec/oracle.hpp"
#include "ksec/rational.hpp"
#include "ksec/td_cuts.hpp"
#include "ksec/tree_cuts.hpp"
#include "ksec/tree_decomposition.hpp"

namespace ksec {

/// Bounds evaluated for one instance. Tree fields are set for tree runs, the
/// decomposition fields for decomposition runs. Bounds that do not apply
/// (e.g. n = 1) are left empty.
struct BoundReport {
  int n = 0;
  int k = 0;
  int max_degree = 0;
  std::optional<int> diam;         // edges on a longest path
  std::optional<Rational> diam_star;
  std::optional<Rational> r;
  std::optional<int> t;            // largest cluster size
  std::optional<long double> bound_tree;
  std::optional<long double> bound_tree_improved;
  std::optional<long double> bound_td;
  int achieved = 0;

  /// Smallest applicable bound.
  std::optional<long double> binding() const;
  /// achieved / (k - 1); every k-section of a tree has width >= k - 1.
  long double approx_ratio() const;
  /// Exact check of `achieved` against every applicable bound.
  bool within_bounds() const;
};

struct TreeKSection {
  KSection section;
  BoundReport report;
  std::vector<DiamCutTrace> traces;
};

struct TdKSection {
  KSection section;
  BoundReport report;
  std::vector<RCutTrace> traces;
};

/// k-section of a tree by cutting off ceil(n/k)-parts first, then
/// floor(n/k)-parts, each with a diameter-preserving cut. k >= n yields
/// singletons plus empty parts. Throws kKOutOfRange (k < 2), kNotATree, and
/// InvariantViolation if a per-cut guarantee fails.
TreeKSection ksection_tree(const Graph& tree, int k,
                           const OracleLimits& limits = {});

struct PrescribedCut {
  std::vector<VertexSet> parts;
  int width = 0;
  BoundReport report;
  /// (|sizes| - 1)(2 + 16/diam*) Delta, checked exactly.
  bool within_bound = true;
};

/// Parts of exactly the given sizes, cut in order. Throws kSizesDontSum,
/// kBadParameters on non-positive sizes.
PrescribedCut cut_prescribed_sizes(const Graph& tree,
                                   std::span<const int> sizes,
                                   const OracleLimits& limits = {});

/// k-section of a graph with a tree decomposition by repeated r-preserving
/// cuts. Throws kKOutOfRange, kInvalidDecomposition, kWidthTooLarge.
TdKSection ksection_td(const Graph& g, const TreeDecomposition& td, int k,
                       const OracleLimits& limits = {});

/// Recursive exact minimum bisection; k a power of two with k <= n.
/// Throws kKNotPowerOfTwo, kKOutOfRange.
KSection recursive_bisection_baseline(const Graph& tree, int k,
                                      const OracleLimits& limits = {});

}  // namespace ksec
