#pragma once

#include <filesystem>
#include <iosfwd>

#include "ksec/graph.hpp"
#include "ksec/tree_decomposition.hpp"

namespace ksec {

// Graph text format:
//   c <comment>
//   p ks <n> <m>
//   <u> <v>        (m lines, 1-indexed)
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);

// PACE-2017 tree decomposition format:
//   c <comment>
//   s td <#bags> <max bag size> <n>
//   b <bag-id> <v...>   (bag ids 1..#bags)
//   <i> <j>             (#bags - 1 tree edges)
// Bag ids are mapped to node index id - 1.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td_file(const std::filesystem::path& path);
void write_td(std::ostream& out, const TreeDecomposition& td);

}  // namespace ksec
