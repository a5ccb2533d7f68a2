// ksec: k-sections of bounded width for trees and tree-decomposed graphs.
//
// Exit codes: 0 ok, 1 other error, 2 bad input (parse error, invalid
// decomposition, bad arguments), 3 invariant violation, 4 resource guard.

#include <bit>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ksec/error.hpp"
#include "ksec/instances.hpp"
#include "ksec/io.hpp"
#include "ksec/ksection.hpp"
#include "ksec/oracle.hpp"
#include "ksec/report.hpp"
#include "ksec/tree_labeling.hpp"

namespace {

using namespace ksec;
using Clock = std::chrono::steady_clock;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitResource = 4;

struct Range {
  int lo = 0;
  int hi = -1;
};

// "a..b" or a single integer.
Range parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadParameters, "bad range '" + s + "'");
  }
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kBadParameters, "cannot write " + path);
  out << j.dump(2) << '\n';
}

void print_section(const KSection& s, const BoundReport& rep) {
  std::cout << "width " << s.width << '\n';
  for (std::size_t i = 0; i < s.parts.size(); ++i) {
    std::cout << "part " << i + 1 << ':';
    for (Vertex v : s.parts[i]) std::cout << ' ' << v;
    std::cout << '\n';
  }
  std::cout << "n " << rep.n << " k " << rep.k << " max_degree "
            << rep.max_degree << '\n';
  if (rep.diam) {
    std::cout << "diam " << *rep.diam << " diam* " << *rep.diam_star << '\n';
  }
  if (rep.r) std::cout << "r " << *rep.r << " t " << *rep.t << '\n';
  auto show = [](const char* name, const std::optional<long double>& b) {
    if (b) std::cout << name << ' ' << static_cast<double>(*b) << '\n';
  };
  show("bound_tree", rep.bound_tree);
  show("bound_tree_improved", rep.bound_tree_improved);
  show("bound_td", rep.bound_td);
  std::cout << "within_bounds " << (rep.within_bounds() ? "yes" : "no") << '\n';
}

int cmd_tree(const std::string& input, int k, const std::string& json_out) {
  const Graph g = read_graph_file(input);
  const TreeKSection res = ksection_tree(g, k);
  print_section(res.section, res.report);
  std::vector<std::string> tags;
  for (const auto& tr : res.traces) tags.emplace_back(to_string(tr.case_tag));
  write_json(json_out, section_json(res.section, res.report, tags));
  return res.report.within_bounds() ? kExitOk : kExitInvariant;
}

int cmd_td(const std::string& graph, const std::string& td_path, int k,
           const std::string& json_out) {
  const Graph g = read_graph_file(graph);
  const TreeDecomposition td = read_td_file(td_path);
  const TdKSection res = ksection_td(g, td, k);
  print_section(res.section, res.report);
  std::vector<std::string> tags;
  for (const auto& tr : res.traces) tags.emplace_back(to_string(tr.case_tag));
  write_json(json_out, section_json(res.section, res.report, tags));
  return res.report.within_bounds() ? kExitOk : kExitInvariant;
}

struct BenchOptions {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::string heights = "4..7";
  std::string n_range = "50..2000";
  std::vector<int> ks{4};
  int count = 10;
  int max_degree = 6;
  int t = 3;
  bool baseline = false;
  bool oracle = false;
  std::string out;
};

void add_comparisons(RunRecord& rec, const Graph& g, int k,
                     const BenchOptions& opt) {
  if (opt.baseline && std::has_single_bit(static_cast<unsigned>(k)) &&
      k <= g.num_vertices()) {
    rec.baseline_width = recursive_bisection_baseline(g, k).width;
  }
  if (opt.oracle && g.num_vertices() <= OracleLimits{}.max_brute_vertices) {
    rec.oracle_width = brute_min_ksection(g, k).width;
  }
}

int cmd_bench(const BenchOptions& opt) {
  std::vector<RunRecord> records;
  bool all_within = true;
  auto need_seed = [&] {
    if (!opt.seed) {
      throw Error(ErrorCode::kBadParameters,
                  "suite '" + opt.suite + "' needs --seed");
    }
    return *opt.seed;
  };
  if (opt.suite == "adversarial") {
    const Range h = parse_range(opt.heights);
    for (int height = h.lo; height <= h.hi; ++height) {
      GeneratorSpec spec;
      spec.family = Family::kAdversarialTernaryPath;
      spec.height = height;
      const Graph g = generate(spec).graph;
      for (int k : opt.ks) {
        const auto start = Clock::now();
        const TreeKSection res = ksection_tree(g, k);
        RunRecord rec = make_record("adv-h" + std::to_string(height),
                                    "adversarial_ternary_path", res.report,
                                    ms_since(start));
        add_comparisons(rec, g, k, opt);
        all_within = all_within && rec.within_bounds;
        records.push_back(std::move(rec));
      }
    }
  } else if (opt.suite == "random-trees") {
    const Range nr = parse_range(opt.n_range);
    if (nr.lo <= nr.hi) {
      Rng rng(need_seed());
      for (int i = 0; i < opt.count; ++i) {
        GeneratorSpec spec;
        spec.family = Family::kRandomTreeMaxdeg;
        spec.n = rng.uniform_int(std::max(nr.lo, 1), nr.hi);
        spec.max_degree = opt.max_degree;
        spec.seed = rng.next();
        const Graph g = generate(spec).graph;
        for (int k : opt.ks) {
          const auto start = Clock::now();
          const TreeKSection res = ksection_tree(g, k);
          RunRecord rec = make_record("rt" + std::to_string(i),
                                      "random_tree_maxdeg", res.report,
                                      ms_since(start));
          add_comparisons(rec, g, k, opt);
          all_within = all_within && rec.within_bounds;
          records.push_back(std::move(rec));
        }
      }
    }
  } else if (opt.suite == "partial-ktrees") {
    const Range nr = parse_range(opt.n_range);
    if (nr.lo <= nr.hi) {
      Rng rng(need_seed());
      for (int i = 0; i < opt.count; ++i) {
        GeneratorSpec spec;
        spec.family = Family::kRandomPartialKtree;
        spec.t = opt.t;
        spec.n = rng.uniform_int(std::max(nr.lo, opt.t), std::max(nr.hi, opt.t));
        spec.seed = rng.next();
        const Instance inst = generate(spec);
        for (int k : opt.ks) {
          const auto start = Clock::now();
          const TdKSection res = ksection_td(inst.graph, *inst.td, k);
          RunRecord rec = make_record("pk" + std::to_string(i),
                                      "random_partial_ktree", res.report,
                                      ms_since(start));
          if (opt.oracle && inst.graph.num_vertices() <=
                                OracleLimits{}.max_brute_vertices) {
            rec.oracle_width = brute_min_ksection(inst.graph, k).width;
          }
          all_within = all_within && rec.within_bounds;
          records.push_back(std::move(rec));
        }
      }
    }
  } else if (opt.suite != "empty") {
    throw Error(ErrorCode::kBadParameters, "unknown suite '" + opt.suite + "'");
  }

  std::ofstream file;
  if (!opt.out.empty()) {
    file.open(opt.out);
    if (!file) throw Error(ErrorCode::kBadParameters, "cannot write " + opt.out);
  }
  std::ostream& out = opt.out.empty() ? std::cout : file;
  out << csv_header() << '\n';
  for (const auto& rec : records) out << to_csv_row(rec) << '\n';
  return all_within ? kExitOk : kExitInvariant;
}

int cmd_gen(const GeneratorSpec& spec, const std::string& prefix, bool with_td) {
  const Instance inst = generate(spec);
  {
    std::ofstream out(prefix + ".gr");
    if (!out) throw Error(ErrorCode::kBadParameters, "cannot write " + prefix + ".gr");
    write_graph(out, inst.graph);
  }
  std::optional<TreeDecomposition> td = inst.td;
  if (!td && with_td) td = tree_decomposition_of_tree(inst.graph);
  if (td) {
    std::ofstream out(prefix + ".td");
    if (!out) throw Error(ErrorCode::kBadParameters, "cannot write " + prefix + ".td");
    write_td(out, *td);
  }
  std::cout << "n " << inst.graph.num_vertices() << " m "
            << inst.graph.num_edges() << '\n';
  return kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& td_path, int k,
               int m) {
  const Graph g = read_graph_file(input);
  if (k > 0) {
    const KSection s = brute_min_ksection(g, k);
    std::cout << "minsec " << s.width << '\n';
    return kExitOk;
  }
  if (m < 0) throw Error(ErrorCode::kBadParameters, "give -k or --m");
  const Cut c = td_path.empty() ? dp_min_size_cut_tree(g, m)
                                : dp_min_size_cut_td(g, read_td_file(td_path), m);
  std::cout << "width " << c.width << "\nblack:";
  for (Vertex v : c.black) std::cout << ' ' << v;
  std::cout << '\n';
  return kExitOk;
}

int cmd_label(const std::string& input) {
  const Graph g = read_graph_file(input);
  const PLabeling lab = p_labeling(g);
  std::cout << "path:";
  for (Vertex v : lab.decomposition.path) std::cout << ' ' << v;
  std::cout << "\nlabel vertex on_path\n";
  for (Label l = 1; l <= g.num_vertices(); ++l) {
    std::cout << l << ' ' << lab.vertex_of(l) << ' ' << (lab.on_path(l) ? 1 : 0)
              << '\n';
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidDecomposition:
    case ErrorCode::kInvalidGraph:
    case ErrorCode::kNotATree:
    case ErrorCode::kNotAForest:
    case ErrorCode::kBadParameters:
    case ErrorCode::kKOutOfRange:
    case ErrorCode::kKNotPowerOfTwo:
    case ErrorCode::kMOutOfRange:
    case ErrorCode::kSizesDontSum:
      return kExitInput;
    case ErrorCode::kResourceLimit:
    case ErrorCode::kTooLarge:
    case ErrorCode::kWidthTooLarge:
      return kExitResource;
    default:
      return kExitError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-sections of bounded width"};
  app.require_subcommand(1);

  std::string input, graph_path, td_path, json_out, prefix = "instance";
  int k = 2;
  int m = -1;

  auto* tree = app.add_subcommand("tree", "k-section of a tree");
  tree->add_option("--input", input, ".gr file")->required();
  tree->add_option("-k", k, "number of parts")->required();
  tree->add_option("--json", json_out, "write the result as JSON");

  auto* td = app.add_subcommand("td", "k-section with a tree decomposition");
  td->add_option("--graph", graph_path, ".gr file")->required();
  td->add_option("--td", td_path, "PACE .td file")->required();
  td->add_option("-k", k, "number of parts")->required();
  td->add_option("--json", json_out, "write the result as JSON");

  BenchOptions bench_opt;
  std::uint64_t seed = 0;
  auto* bench = app.add_subcommand("bench", "benchmark suites as CSV");
  bench->add_option("suite", bench_opt.suite,
                    "adversarial | random-trees | partial-ktrees | empty")
      ->required();
  auto* seed_opt = bench->add_option("--seed", seed, "PRNG seed");
  bench->add_option("--heights", bench_opt.heights, "h range, e.g. 4..7");
  bench->add_option("--n", bench_opt.n_range, "n range, e.g. 50..2000");
  bench->add_option("-k", bench_opt.ks, "part counts")->delimiter(',');
  bench->add_option("--count", bench_opt.count, "instances per suite");
  bench->add_option("--max-degree", bench_opt.max_degree, "degree cap");
  bench->add_option("--t", bench_opt.t, "bag size for partial k-trees");
  bench->add_flag("--baseline", bench_opt.baseline,
                  "add recursive-bisection widths (k a power of two)");
  bench->add_flag("--oracle", bench_opt.oracle, "add brute-force MinSec (n <= 14)");
  bench->add_option("--out", bench_opt.out, "CSV file (default stdout)");

  GeneratorSpec spec;
  std::string family = "path";
  bool with_td = false;
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("--family", family, "instance family")->required();
  gen->add_option("--n", spec.n);
  gen->add_option("--arity", spec.arity);
  gen->add_option("--height", spec.height);
  gen->add_option("--max-degree", spec.max_degree);
  gen->add_option("--t", spec.t);
  gen->add_option("--seed", spec.seed)->required();
  gen->add_option("--out", prefix, "output prefix (.gr, .td appended)");
  gen->add_flag("--with-td", with_td, "also write a width-1 td for trees");

  auto* oracle = app.add_subcommand("oracle", "exact reference values");
  oracle->add_option("--input", input, ".gr file")->required();
  oracle->add_option("--td", td_path, "PACE .td file (size-m cut DP)");
  auto* k_opt = oracle->add_option("-k", k, "brute-force MinSec(k)");
  oracle->add_option("--m", m, "minimum cut with |B| = m");

  auto* label = app.add_subcommand("label", "P-labeling along a longest path");
  label->add_option("--input", input, ".gr file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*tree) return cmd_tree(input, k, json_out);
    if (*td) return cmd_td(graph_path, td_path, k, json_out);
    if (*bench) {
      if (*seed_opt) bench_opt.seed = seed;
      return cmd_bench(bench_opt);
    }
    if (*gen) {
      spec.family = family_from_string(family);
      return cmd_gen(spec, prefix, with_td);
    }
    if (*oracle) return cmd_oracle(input, td_path, *k_opt ? k : 0, m);
    if (*label) return cmd_label(input);
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
