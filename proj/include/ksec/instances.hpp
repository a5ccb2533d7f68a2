#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ksec/graph.hpp"
#include "ksec/tree_decomposition.hpp"

namespace ksec {

/// xoshiro256** seeded through splitmix64. Bounded draws use rejection
/// sampling, so a seed produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int uniform_int(int lo, int hi);
  /// Fisher-Yates.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::uint64_t s_[4];
};

enum class Family {
  kPath,
  kStar,
  kCaterpillar,
  kSpider,
  kPerfectDary,
  kAdversarialTernaryPath,
  kRandomTreeMaxdeg,
  kRandomPartialKtree,
};

std::string_view to_string(Family f);
/// Throws kBadParameters on an unknown name.
Family family_from_string(std::string_view name);

/// Parameters per family (unused ones are ignored):
///   path, star            n
///   caterpillar           n spine vertices, `arity` legs on each
///   spider                `arity` legs of `height` vertices around a centre
///   perfect_dary          `arity`, `height`
///   adversarial_ternary_path  `height`
///   random_tree_maxdeg    n, `max_degree`, seed
///   random_partial_ktree  n, bag size `t`, seed
struct GeneratorSpec {
  Family family = Family::kPath;
  int n = 0;
  int max_degree = 0;
  int arity = 0;
  int height = 0;
  int t = 0;
  std::uint64_t seed = 0;
};

struct Instance {
  Graph graph;
  std::optional<TreeDecomposition> td;
};

/// Throws kBadParameters when the parameters are out of range.
Instance generate(const GeneratorSpec& spec);

/// Width-1 decomposition of a tree rooted at vertex 1: node v-1 holds
/// {v, parent(v)}, the root node holds {1}, and the node tree copies the
/// tree's edges. Throws kNotATree.
TreeDecomposition tree_decomposition_of_tree(const Graph& tree);

/// One representative of every unlabeled tree on n vertices.
std::vector<Graph> all_free_trees(int n);

/// Number of vertices of the ternary part of the adversarial tree of height h.
int ternary_tree_size(int height);

}  // namespace ksec
