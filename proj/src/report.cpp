#include "lange/report.hpp"

#include "json.hpp"

#include <stdexcept>

namespace lange::report {
namespace {

std::string text(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return "n/a"; }
    std::string operator()(Int v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_field(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

nlohmann::ordered_json to_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(Int v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "md" || name == "markdown") return Format::markdown;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or md)");
}

Cell cell(Int v) { return v; }
Cell cell(bool v) { return v; }
Cell cell(std::string v) { return v; }
Cell cell(const char* v) { return std::string(v); }
Cell cell(const Rational& v) { return to_string(v); }
Cell cell(const std::optional<Int>& v) { return v ? Cell(*v) : Cell(std::monostate{}); }

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

void render(const Table& t, Format f, std::ostream& out) {
  switch (f) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["command"] = t.command;
      doc["columns"] = t.columns;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = to_json(row[i]);
        doc["rows"].push_back(std::move(obj));
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(text(row[i]));
        out << "\n";
      }
      break;
    }
    case Format::markdown: {
      out << "|";
      for (const auto& c : t.columns) out << " " << md_field(c) << " |";
      out << "\n|";
      for (std::size_t i = 0; i < t.columns.size(); ++i) out << "---|";
      out << "\n";
      for (const auto& row : t.rows) {
        out << "|";
        for (const auto& c : row) out << " " << md_field(text(c)) << " |";
        out << "\n";
      }
      break;
    }
  }
}

}  // namespace lange::report
