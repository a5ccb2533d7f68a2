#include "ksec/report.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "ksec/error.hpp"

namespace ksec {

namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return fmt_double(*v);
  } else if constexpr (std::is_same_v<T, std::string>) {
    return *v;
  } else {
    return std::to_string(*v);
  }
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, "csv: " + what);
}

int parse_int(std::string_view s) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    malformed("bad integer '" + std::string(s) + "'");
  }
  return out;
}

double parse_double(std::string_view s) {
  const std::string str(s);
  char* end = nullptr;
  const double out = std::strtod(str.c_str(), &end);
  if (str.empty() || end != str.c_str() + str.size()) {
    malformed("bad number '" + str + "'");
  }
  return out;
}

std::optional<int> opt_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_int(s);
}

std::optional<double> opt_double(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

std::optional<std::string> opt_string(std::string_view s) {
  if (s.empty()) return std::nullopt;
  return std::string(s);
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> json_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::optional<double> to_double(const std::optional<long double>& v) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

}  // namespace

std::string rational_string(const Rational& q) { return q.to_string(); }

RunRecord make_record(std::string id, std::string family,
                      const BoundReport& report, double wall_ms) {
  RunRecord rec;
  rec.id = std::move(id);
  rec.family = std::move(family);
  rec.n = report.n;
  rec.k = report.k;
  rec.max_degree = report.max_degree;
  rec.diam = report.diam;
  if (report.diam_star) rec.diam_star = rational_string(*report.diam_star);
  if (report.r) rec.r = rational_string(*report.r);
  rec.t = report.t;
  rec.achieved = report.achieved;
  rec.bound_tree = to_double(report.bound_tree);
  rec.bound_tree_improved = to_double(report.bound_tree_improved);
  rec.bound_td = to_double(report.bound_td);
  rec.binding = to_double(report.binding());
  rec.within_bounds = report.within_bounds();
  rec.wall_ms = wall_ms;
  return rec;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{
      "id",       "family",     "n",
      "k",        "max_degree", "diam",
      "diam_star", "r",         "t",
      "achieved", "bound_tree", "bound_tree_improved",
      "bound_td", "binding",    "within_bounds",
      "oracle_width", "baseline_width", "wall_ms"};
  return cols;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string to_csv_row(const RunRecord& rec) {
  for (const std::string* s : {&rec.id, &rec.family}) {
    if (s->find_first_of(",\n\"") != std::string::npos) {
      throw Error(ErrorCode::kBadParameters, "csv field contains a separator");
    }
  }
  const std::vector<std::string> cells{
      rec.id,
      rec.family,
      std::to_string(rec.n),
      std::to_string(rec.k),
      std::to_string(rec.max_degree),
      cell(rec.diam),
      cell(rec.diam_star),
      cell(rec.r),
      cell(rec.t),
      std::to_string(rec.achieved),
      cell(rec.bound_tree),
      cell(rec.bound_tree_improved),
      cell(rec.bound_td),
      cell(rec.binding),
      rec.within_bounds ? "1" : "0",
      cell(rec.oracle_width),
      cell(rec.baseline_width),
      fmt_double(rec.wall_ms)};
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += ',';
    out += cells[i];
  }
  return out;
}

RunRecord from_csv_row(std::string_view row) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = row.find(',', start);
    f.push_back(row.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (f.size() != csv_columns().size()) {
    malformed("expected " + std::to_string(csv_columns().size()) +
              " fields, got " + std::to_string(f.size()));
  }
  RunRecord rec;
  rec.id = std::string(f[0]);
  rec.family = std::string(f[1]);
  rec.n = parse_int(f[2]);
  rec.k = parse_int(f[3]);
  rec.max_degree = parse_int(f[4]);
  rec.diam = opt_int(f[5]);
  rec.diam_star = opt_string(f[6]);
  rec.r = opt_string(f[7]);
  rec.t = opt_int(f[8]);
  rec.achieved = parse_int(f[9]);
  rec.bound_tree = opt_double(f[10]);
  rec.bound_tree_improved = opt_double(f[11]);
  rec.bound_td = opt_double(f[12]);
  rec.binding = opt_double(f[13]);
  if (f[14] != "0" && f[14] != "1") malformed("within_bounds must be 0 or 1");
  rec.within_bounds = f[14] == "1";
  rec.oracle_width = opt_int(f[15]);
  rec.baseline_width = opt_int(f[16]);
  rec.wall_ms = parse_double(f[17]);
  return rec;
}

json to_json(const RunRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["family"] = rec.family;
  j["n"] = rec.n;
  j["k"] = rec.k;
  j["max_degree"] = rec.max_degree;
  j["diam"] = opt_json(rec.diam);
  j["diam_star"] = opt_json(rec.diam_star);
  j["r"] = opt_json(rec.r);
  j["t"] = opt_json(rec.t);
  j["achieved"] = rec.achieved;
  j["bound_tree"] = opt_json(rec.bound_tree);
  j["bound_tree_improved"] = opt_json(rec.bound_tree_improved);
  j["bound_td"] = opt_json(rec.bound_td);
  j["binding"] = opt_json(rec.binding);
  j["within_bounds"] = rec.within_bounds;
  j["oracle_width"] = opt_json(rec.oracle_width);
  j["baseline_width"] = opt_json(rec.baseline_width);
  j["wall_ms"] = rec.wall_ms;
  return j;
}

RunRecord record_from_json(const json& j) {
  RunRecord rec;
  rec.id = j.at("id").get<std::string>();
  rec.family = j.at("family").get<std::string>();
  rec.n = j.at("n").get<int>();
  rec.k = j.at("k").get<int>();
  rec.max_degree = j.at("max_degree").get<int>();
  rec.diam = json_opt<int>(j, "diam");
  rec.diam_star = json_opt<std::string>(j, "diam_star");
  rec.r = json_opt<std::string>(j, "r");
  rec.t = json_opt<int>(j, "t");
  rec.achieved = j.at("achieved").get<int>();
  rec.bound_tree = json_opt<double>(j, "bound_tree");
  rec.bound_tree_improved = json_opt<double>(j, "bound_tree_improved");
  rec.bound_td = json_opt<double>(j, "bound_td");
  rec.binding = json_opt<double>(j, "binding");
  rec.within_bounds = j.at("within_bounds").get<bool>();
  rec.oracle_width = json_opt<int>(j, "oracle_width");
  rec.baseline_width = json_opt<int>(j, "baseline_width");
  rec.wall_ms = j.at("wall_ms").get<double>();
  return rec;
}

json section_json(const KSection& section, const BoundReport& report,
                  const std::vector<std::string>& trace_tags) {
  json bounds;
  bounds["n"] = report.n;
  bounds["k"] = report.k;
  bounds["max_degree"] = report.max_degree;
  bounds["diam"] = opt_json(report.diam);
  bounds["diam_star"] =
      report.diam_star ? json(rational_string(*report.diam_star)) : json(nullptr);
  bounds["r"] = report.r ? json(rational_string(*report.r)) : json(nullptr);
  bounds["t"] = opt_json(report.t);
  bounds["bound_tree"] = opt_json(to_double(report.bound_tree));
  bounds["bound_tree_improved"] = opt_json(to_double(report.bound_tree_improved));
  bounds["bound_td"] = opt_json(to_double(report.bound_td));
  bounds["binding"] = opt_json(to_double(report.binding()));
  bounds["achieved"] = report.achieved;
  bounds["approx_ratio"] = static_cast<double>(report.approx_ratio());
  bounds["within_bounds"] = report.within_bounds();
  json j;
  j["parts"] = section.parts;
  j["width"] = section.width;
  j["bounds"] = bounds;
  j["trace"] = trace_tags;
  return j;
}

}  // namespace ksec
