#pragma once

#include <string>
#include <deque>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arcpart/check.hpp"

namespace arcpart {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "arcpart.report/1";

enum class Status { pass, fail, finding };

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

struct Mismatch {
  std::string location;
  std::string expected;
  std::string got;
  /// Mismatches against a conjecture or a guess are findings, not failures.
  bool finding = false;
};

/// Result of one verification campaign.
///
/// status is pass when there are no mismatches, finding when every mismatch
/// is a finding, and fail otherwise.
struct Report {
  std::string command;
  Json args = Json::object();
  // deque: references returned by table() stay valid as tables are added
  std::deque<std::pair<std::string, Table>> tables;
  std::vector<Mismatch> mismatches;
  Json data = Json::object();
  std::size_t checks = 0;
  double wall_time_s = 0.0;

  Status status() const;
  Table& table(const std::string& label, std::vector<std::string> columns);
  /// Records a check; failures become mismatches located as "<name> @ <location>".
  void record(const Check& c, bool finding = false);
  void record_all(const std::vector<Check>& cs, bool finding = false);
  /// Appends another report's tables, mismatches and check count.
  void merge(Report other);
};

std::string to_string(Status s);

enum class Format { json, csv, text };
Format parse_format(const std::string& s);

Json to_json(const Report& r);
std::string render(const Report& r, Format f);

/// 0 for pass, 1 for fail or finding.
int exit_code(const Report& r);

}  // namespace arcpart
