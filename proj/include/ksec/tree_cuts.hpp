#pragma once

#include <cstdint>
#include <string_view>

#include "ksec/graph.hpp"
#include "ksec/oracle.hpp"
#include "ksec/rational.hpp"

namespace ksec {

/// Approximate m-cut in a tree: m/2 <= |B| <= m, width <= max degree, v in W.
/// m in [1, 2n - 2]. Throws kMOutOfRange, kNotATree.
Cut approximate_cut(const Graph& tree, Vertex v, int m);

/// Cut with |B| = m of minimum width, which is at most
/// (8 / diam*) * max degree. m in [1, n].
Cut exact_cut_bounded(const Graph& forest, int m,
                      const OracleLimits& limits = {});

enum class DiamCutCase { kDeg2, kCase1, kCase2a, kCase2b, kCase3a, kCase3b };

std::string_view to_string(DiamCutCase c);

struct DiamCutTrace {
  DiamCutCase case_tag = DiamCutCase::kDeg2;
  int m = 0;
  Rational diam_star;
  std::int64_t floor_dm = 0;
  /// Anchor label and its vertex (0 when unused, e.g. in kDeg2).
  int anchor_label = 0;
  Vertex anchor = 0;
  /// The labels v, ..., v + m - 1 as vertices.
  VertexSet m_set;
  /// Path-vertex whose subtree is split (Case 2b / 3), else 0.
  Vertex z = 0;
  int m_tilde = 0;
  VertexSet black_z;
  VertexSet white_z;
  /// The set the inner exact cut is taken from (equals m_set in Case 1/2a).
  VertexSet v_tilde;
  int inner_width = 0;  // width of the final cut inside G[v_tilde]
  int outer_width = 0;  // e_G(v_tilde, V \ v_tilde)
};

struct DiamCut {
  Cut cut;
  DiamCutTrace trace;
};

/// Cut with |B| = m, diam*(G[W]) >= diam*(G) and width at most
/// (2 + 16 / diam*) * max degree. m in [1, n - 1].
DiamCut diameter_preserving_cut(const Graph& forest, int m,
                                const OracleLimits& limits = {});

}  // namespace ksec
