#pragma once

#include <cstdint>

#include "ksec/graph.hpp"
#include "ksec/tree_decomposition.hpp"

namespace ksec {

/// KSEC_MAX_MEM_MB if set to a positive integer, else 2048.
std::int64_t default_memory_limit_mb();

/// Caps for the exact solvers.
struct OracleLimits {
  int max_brute_vertices = 14;
  int max_td_width = 12;
  std::int64_t max_memory_mb = default_memory_limit_mb();
};

/// Exact MinSec(k, g) by enumerating balanced partitions with branch and
/// bound. Throws kTooLarge above `max_brute_vertices`, kKOutOfRange if k < 1.
KSection brute_min_ksection(const Graph& g, int k,
                            const OracleLimits& limits = {});

/// Minimum width over all cuts with |B| = m in a forest, by knapsack DP over
/// rooted subtrees. O(n * m) time. Throws kMOutOfRange, kNotAForest,
/// kResourceLimit.
Cut dp_min_size_cut_tree(const Graph& forest, int m,
                         const OracleLimits& limits = {});

/// Minimum width over all cuts with |B| = m, by DP over a tree decomposition
/// with states (colouring of the cluster, black count). Throws kMOutOfRange,
/// kWidthTooLarge above `max_td_width`, kInvalidDecomposition if `td` does not
/// cover every vertex and edge, kResourceLimit.
Cut dp_min_size_cut_td(const Graph& g, const TreeDecomposition& td, int m,
                       const OracleLimits& limits = {});

}  // namespace ksec
