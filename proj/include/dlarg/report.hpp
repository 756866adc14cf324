#pragma once

#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

namespace dlarg {

using Json = nlohmann::ordered_json;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;  // numbers, strings, booleans or null

  void add(std::vector<Json> row);
};

// Output of one command: the echoed configuration plus named tables.
struct Report {
  std::string command;
  Json config = Json::object();
  std::deque<Table> tables;  // deque: table() references stay valid

  Table& table(const std::string& name, std::vector<std::string> columns);
  const Table& find(const std::string& name) const;  // NotFoundError if absent

  // One block per table: "# <name>", header, rows. Reals at 12 significant digits.
  std::string to_csv() const;
  // Shortest round-trip reals.
  std::string to_json() const;
  std::string render(const std::string& format) const;
};

std::string csv_cell(const Json& v);

}  // namespace dlarg
