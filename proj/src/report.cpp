#include "dlarg/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dlarg/error.hpp"

namespace dlarg {

void Table::add(std::vector<Json> row) {
  if (row.size() != columns.size())
    throw DomainError("table " + name + ": row has " + std::to_string(row.size()) +
                      " cells, expected " + std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

Table& Report::table(const std::string& name, std::vector<std::string> columns) {
  tables.push_back(Table{name, std::move(columns), {}});
  return tables.back();
}

const Table& Report::find(const std::string& name) const {
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw NotFoundError("report has no table " + name);
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  if (v.is_number_float()) {
    const double x = v.get<double>();
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "# command " << command << "\n";
  for (const auto& [k, v] : config.items()) os << "# " << k << " = " << v.dump() << "\n";
  for (const auto& t : tables) {
    os << "# " << t.name << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << "\n";
    }
  }
  return os.str();
}

std::string Report::to_json() const {
  Json j;
  j["command"] = command;
  j["config"] = config;
  Json ts = Json::object();
  for (const auto& t : tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
      rows.push_back(std::move(obj));
    }
    ts[t.name] = std::move(rows);
  }
  j["tables"] = std::move(ts);
  return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
  if (format == "csv") return to_csv();
  if (format == "json") return to_json();
  throw DomainError("unknown output format '" + format + "'");
}

}  // namespace dlarg
