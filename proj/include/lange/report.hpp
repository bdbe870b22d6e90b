#pragma once

// Tabular reports rendered as JSON, CSV or Markdown. Every format carries the
// same cells; rationals are strings "a/b" everywhere.

#include "lange/types.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lange::report {

using Cell = std::variant<std::monostate, Int, bool, std::string>;

enum class Format { json, csv, markdown };

Format parse_format(const std::string& name);

Cell cell(Int v);
Cell cell(bool v);
Cell cell(std::string v);
Cell cell(const char* v);
Cell cell(const Rational& v);
Cell cell(const std::optional<Int>& v);

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// JSON: {"command": ..., "columns": [...], "rows": [{column: value}, ...]}.
/// CSV: header row then one line per row. Markdown: a pipe table.
/// Absent values are null in JSON and "n/a" elsewhere.
void render(const Table& t, Format f, std::ostream& out);

}  // namespace lange::report
