#pragma once

#include <string>
#include <utility>
#include <vector>

namespace swinv {

// A command result: named columns, one row per result, all values already
// rendered (rationals as p/q). Tabular reports print as an aligned table;
// the others print one "key = value" line per column.
struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> notes;
  bool tabular = false;

  void add_row(std::vector<std::string> row);
};

std::string render_text(const Report &r);
std::string render_json(const Report &r);

} // namespace swinv
