#include "cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace induction::cli {

std::string full_precision(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw std::runtime_error("failed to format double");
  return std::string(buffer, end);
}

std::string display_precision(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.5g", value);
  return buffer;
}

namespace {

std::string render(const Value& value, bool full) {
  struct Visitor {
    bool full;
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return full ? full_precision(v) : display_precision(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{full}, value);
}

}  // namespace

void Table::add_row(std::vector<Value> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

Table Record::as_table() const {
  Table t;
  std::vector<Value> row;
  for (const auto& [key, value] : fields) {
    t.columns.push_back(key);
    row.push_back(value);
  }
  t.rows.push_back(std::move(row));
  return t;
}

nlohmann::json to_json(const Value& value) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(std::uint64_t v) const { return v; }
    nlohmann::json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, value);
}

nlohmann::json to_json(const Record& record) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, value] : record.fields) obj[key] = to_json(value);
  return obj;
}

nlohmann::json to_json(const Table& table) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = to_json(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_csv(std::ostream& out, const Table& table) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << csv_escape(cells[i]);
    }
    out << "\r\n";
  };
  line(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& v : row) cells.push_back(render(v, true));
    line(cells);
  }
}

void write_key_values(std::ostream& out, const Record& record) {
  std::size_t width = 0;
  for (const auto& [key, value] : record.fields) width = std::max(width, key.size());
  for (const auto& [key, value] : record.fields) {
    out << key << std::string(width - key.size() + 2, ' ') << render(value, false) << '\n';
  }
}

void write_columns(std::ostream& out, const Table& table) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> widths;
  for (const auto& c : table.columns) widths.push_back(c.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(render(row[i], false));
      widths[i] = std::max(widths[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i) out << "  ";
      out << std::string(widths[i] - line[i].size(), ' ') << line[i];
    }
    out << '\n';
  };
  emit(table.columns);
  for (const auto& line : cells) emit(line);
}

}  // namespace induction::cli
