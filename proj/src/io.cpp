#include "ksec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ksec/error.hpp"

namespace ksec {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long long to_int(std::string_view token, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Yields tokenized non-comment, non-blank lines with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, buffer_)) {
      ++line_;
      if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
      tokens = tokenize(buffer_);
      if (tokens.empty() || tokens.front() == "c") continue;
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_ = 0;
};

template <typename Reader>
auto open_and_read(const std::filesystem::path& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return reader(in);
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line(), "missing header");
  if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "ks") {
    throw ParseError(reader.line(), "expected 'p ks <n> <m>'");
  }
  const long long n = to_int(tokens[2], reader.line());
  const long long m = to_int(tokens[3], reader.line());
  if (n < 0 || m < 0 || n > (1LL << 30)) {
    throw ParseError(reader.line(), "bad n or m");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::size_t> line_of;
  while (reader.next(tokens)) {
    if (tokens.size() != 2) {
      throw ParseError(reader.line(), "expected '<u> <v>'");
    }
    const long long u = to_int(tokens[0], reader.line());
    const long long v = to_int(tokens[1], reader.line());
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError(reader.line(), "vertex outside [1," + std::to_string(n) +
                                          "]");
    }
    if (u == v) throw ParseError(reader.line(), "self-loop");
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(reader.line(), "more than " + std::to_string(m) +
                                          " edges");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    line_of.push_back(reader.line());
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(reader.line(), "expected " + std::to_string(m) +
                                        " edges, found " +
                                        std::to_string(edges.size()));
  }
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const Error& e) {
    // Parallel edge: report the second occurrence.
    std::vector<std::pair<Edge, std::size_t>> keyed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge canon{std::min(edges[i].u, edges[i].v),
                 std::max(edges[i].u, edges[i].v)};
      keyed.emplace_back(canon, line_of[i]);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      if (keyed[i].first == keyed[i - 1].first) {
        throw ParseError(std::max(keyed[i].second, keyed[i - 1].second),
                         "parallel edge");
      }
    }
    throw ParseError(reader.line(), e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) {
  return open_and_read(path, [](std::istream& in) { return read_graph(in); });
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p ks " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

TreeDecomposition read_td(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tokens;
  if (!reader.next(tokens)) throw ParseError(reader.line(), "missing header");
  if (tokens.size() != 5 || tokens[0] != "s" || tokens[1] != "td") {
    throw ParseError(reader.line(),
                     "expected 's td <#bags> <max bag size> <n>'");
  }
  const long long bags = to_int(tokens[2], reader.line());
  const long long declared_max = to_int(tokens[3], reader.line());
  const long long n = to_int(tokens[4], reader.line());
  if (bags < 1 || declared_max < 0 || n < 0 || bags > (1LL << 30) ||
      n > (1LL << 30)) {
    throw ParseError(reader.line(), "bad header values");
  }
  std::vector<VertexSet> clusters(static_cast<std::size_t>(bags));
  std::vector<char> seen_bag(static_cast<std::size_t>(bags), 0);
  std::vector<std::pair<NodeId, NodeId>> edges;
  long long bags_read = 0;
  std::size_t actual_max = 0;
  while (reader.next(tokens)) {
    if (tokens.front() == "b") {
      if (tokens.size() < 2) throw ParseError(reader.line(), "bag without id");
      const long long id = to_int(tokens[1], reader.line());
      if (id < 1 || id > bags) {
        throw ParseError(reader.line(), "bag id outside [1," +
                                            std::to_string(bags) + "]");
      }
      if (seen_bag[id - 1]) throw ParseError(reader.line(), "repeated bag id");
      seen_bag[id - 1] = 1;
      ++bags_read;
      VertexSet& bag = clusters[static_cast<std::size_t>(id - 1)];
      for (std::size_t k = 2; k < tokens.size(); ++k) {
        const long long v = to_int(tokens[k], reader.line());
        if (v < 1 || v > n) {
          throw ParseError(reader.line(), "bag vertex outside [1," +
                                              std::to_string(n) + "]");
        }
        bag.push_back(static_cast<Vertex>(v));
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(reader.line(), "repeated vertex in bag");
      }
      actual_max = std::max(actual_max, bag.size());
    } else {
      if (tokens.size() != 2) {
        throw ParseError(reader.line(), "expected 'b ...' or '<i> <j>'");
      }
      const long long a = to_int(tokens[0], reader.line());
      const long long b = to_int(tokens[1], reader.line());
      if (a < 1 || b < 1 || a > bags || b > bags || a == b) {
        throw ParseError(reader.line(), "bad tree edge");
      }
      edges.emplace_back(static_cast<NodeId>(a - 1), static_cast<NodeId>(b - 1));
    }
  }
  if (bags_read != bags) {
    throw ParseError(reader.line(), "expected " + std::to_string(bags) +
                                        " bags, found " +
                                        std::to_string(bags_read));
  }
  if (static_cast<long long>(actual_max) != declared_max) {
    throw ParseError(reader.line(), "declared max bag size " +
                                        std::to_string(declared_max) +
                                        ", actual " +
                                        std::to_string(actual_max));
  }
  if (static_cast<long long>(edges.size()) != bags - 1) {
    throw ParseError(reader.line(), "expected " + std::to_string(bags - 1) +
                                        " tree edges, found " +
                                        std::to_string(edges.size()));
  }
  try {
    return TreeDecomposition(static_cast<int>(n), std::move(clusters),
                             std::move(edges));
  } catch (const Error& e) {
    throw ParseError(reader.line(), e.what());
  }
}

TreeDecomposition read_td_file(const std::filesystem::path& path) {
  return open_and_read(path, [](std::istream& in) { return read_td(in); });
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
  out << "s td " << td.num_nodes() << ' ' << td.max_cluster_size() << ' '
      << td.num_vertices() << '\n';
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    out << "b " << (i + 1);
    for (Vertex v : td.cluster(i)) out << ' ' << v;
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges()) out << (a + 1) << ' ' << (b + 1) << '\n';
}

}  // namespace ksec
