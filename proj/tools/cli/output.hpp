#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace induction::cli {

enum class Format { table, json, csv };

// Shortest decimal string that parses back to the same double.
std::string full_precision(double value);

// Five significant digits, as shown in table output.
std::string display_precision(double value);

using Value = std::variant<std::monostate, std::uint64_t, double, std::string>;

/// Named columns and rows of values. Rendered as aligned text, RFC 4180 CSV
/// or JSON from the same data so every format carries the same numbers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  void add_row(std::vector<Value> row);
};

/// One record shown as key/value lines in table format.
struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  void add(std::string key, Value value) { fields.emplace_back(std::move(key), std::move(value)); }
  [[nodiscard]] Table as_table() const;
};

nlohmann::json to_json(const Value& value);
nlohmann::json to_json(const Record& record);
nlohmann::json to_json(const Table& table);  // array of objects

void write_csv(std::ostream& out, const Table& table);
void write_key_values(std::ostream& out, const Record& record);
void write_columns(std::ostream& out, const Table& table);

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_escape(const std::string& field);

}  // namespace induction::cli
