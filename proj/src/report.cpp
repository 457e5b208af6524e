#include "arcpart/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arcpart {

Status Report::status() const {
  if (mismatches.empty())
    return Status::pass;
  const bool all_findings = std::all_of(mismatches.begin(), mismatches.end(),
                                        [](const Mismatch& m) { return m.finding; });
  return all_findings ? Status::finding : Status::fail;
}

Table& Report::table(const std::string& label, std::vector<std::string> columns) {
  for (auto& [name, t] : tables)
    if (name == label)
      return t;
  tables.emplace_back(label, Table{std::move(columns), {}});
  return tables.back().second;
}

void Report::record(const Check& c, bool finding) {
  ++checks;
  if (c.holds)
    return;
  mismatches.push_back({c.name + (c.location.empty() ? "" : " @ " + c.location), c.expected, c.got,
                        finding});
}

void Report::record_all(const std::vector<Check>& cs, bool finding) {
  for (const Check& c : cs)
    record(c, finding);
}

void Report::merge(Report other) {
  for (auto& [label, t] : other.tables) {
    Table& mine = table(label, t.columns);
    mine.rows.insert(mine.rows.end(), std::make_move_iterator(t.rows.begin()),
                     std::make_move_iterator(t.rows.end()));
  }
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
  checks += other.checks;
}

std::string to_string(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::finding: return "finding";
  }
  return "?";
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + s + "' (expected json, csv or text)");
}

Json to_json(const Report& r) {
  Json j;
  j["schema"] = report_schema;
  j["command"] = r.command;
  j["args"] = r.args;
  j["status"] = to_string(r.status());
  j["checks"] = r.checks;
  Json tables = Json::object();
  for (const auto& [label, t] : r.tables)
    tables[label] = Json{{"columns", t.columns}, {"rows", t.rows}};
  j["tables"] = std::move(tables);
  Json mm = Json::array();
  for (const Mismatch& m : r.mismatches)
    mm.push_back({{"location", m.location},
                  {"expected", m.expected},
                  {"got", m.got},
                  {"kind", m.finding ? "finding" : "failure"}});
  j["mismatches"] = std::move(mm);
  if (!r.data.empty())
    j["data"] = r.data;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const Report& r, Format f) {
  std::ostringstream os;
  switch (f) {
  case Format::json:
    os << to_json(r).dump(2) << '\n';
    break;
  case Format::csv:
    for (const auto& [label, t] : r.tables) {
      os << "# " << label << '\n';
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << csv_escape(t.columns[c]);
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          os << (c ? "," : "") << csv_escape(cell(row[c]));
        os << '\n';
      }
    }
    break;
  case Format::text:
    os << r.command << ": " << to_string(r.status()) << " (" << r.checks << " checks, "
       << r.mismatches.size() << " mismatches)\n";
    if (!r.data.empty())
      os << r.data.dump() << '\n';
    for (const auto& [label, t] : r.tables) {
      os << "\n[" << label << "]\n";
      for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "\t" : "") << t.columns[c];
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
          os << (c ? "\t" : "") << cell(row[c]);
        os << '\n';
      }
    }
    for (const Mismatch& m : r.mismatches)
      os << (m.finding ? "finding: " : "mismatch: ") << m.location << " expected " << m.expected
         << " got " << m.got << '\n';
    break;
  }
  return os.str();
}

int exit_code(const Report& r) { return r.status() == Status::pass ? 0 : 1; }

}  // namespace arcpart
