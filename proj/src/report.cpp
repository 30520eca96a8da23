#include "swinv/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace swinv {

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::logic_error("report row width does not match columns");
  rows.push_back(std::move(row));
}

std::string render_text(const Report &r) {
  std::string out;
  for (const auto &[key, value] : r.notes)
    out += "# " + key + " = " + value + "\n";
  if (!r.tabular) {
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (i)
        out += "\n";
      for (std::size_t j = 0; j < r.columns.size(); ++j)
        out += r.columns[j] + " = " + r.rows[i][j] + "\n";
    }
    return out;
  }
  std::vector<std::size_t> width(r.columns.size());
  for (std::size_t j = 0; j < r.columns.size(); ++j) {
    width[j] = r.columns[j].size();
    for (const auto &row : r.rows)
      width[j] = std::max(width[j], row[j].size());
  }
  auto line = [&](const std::vector<std::string> &cells) {
    std::string s;
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j)
        s += "  ";
      if (j + 1 == cells.size())
        s += cells[j];
      else
        s += cells[j] + std::string(width[j] - cells[j].size(), ' ');
    }
    return s + "\n";
  };
  out += line(r.columns);
  for (const auto &row : r.rows)
    out += line(row);
  return out;
}

std::string render_json(const Report &r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  auto notes = nlohmann::ordered_json::object();
  for (const auto &[key, value] : r.notes)
    notes[key] = value;
  j["notes"] = notes;
  j["columns"] = r.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto &row : r.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < r.columns.size(); ++c)
      obj[r.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

} // namespace swinv
