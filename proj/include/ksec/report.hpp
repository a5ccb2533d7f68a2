#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ksec/ksection.hpp"

namespace ksec {

/// One benchmark or CLI run. Rationals are kept as "p/q" strings so records
/// round-trip exactly; optional fields are empty CSV cells / JSON null.
struct RunRecord {
  std::string id;
  std::string family;
  int n = 0;
  int k = 0;
  int max_degree = 0;
  std::optional<int> diam;
  std::optional<std::string> diam_star;
  std::optional<std::string> r;
  std::optional<int> t;
  int achieved = 0;
  std::optional<double> bound_tree;
  std::optional<double> bound_tree_improved;
  std::optional<double> bound_td;
  std::optional<double> binding;
  bool within_bounds = true;
  std::optional<int> oracle_width;
  std::optional<int> baseline_width;
  double wall_ms = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

RunRecord make_record(std::string id, std::string family,
                      const BoundReport& report, double wall_ms);

const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string to_csv_row(const RunRecord& rec);
/// Throws kParse on a malformed row.
RunRecord from_csv_row(std::string_view row);

nlohmann::json to_json(const RunRecord& rec);
RunRecord record_from_json(const nlohmann::json& j);

std::string rational_string(const Rational& q);

/// Parts, width, bounds and per-cut case tags of one k-section.
nlohmann::json section_json(const KSection& section, const BoundReport& report,
                            const std::vector<std::string>& trace_tags);

}  // namespace ksec
