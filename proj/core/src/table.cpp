#include "djc/table.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace djc {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_escape(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void TimeSeriesTable::add_column(const std::string& column_name, std::vector<double> values) {
  for (const auto& [existing, _] : columns_)
    if (existing == column_name)
      throw std::invalid_argument("TimeSeriesTable: duplicate column '" + column_name + "'");
  if (!columns_.empty() && values.size() != n_rows())
    throw std::invalid_argument("TimeSeriesTable: column '" + column_name + "' has " +
                                std::to_string(values.size()) + " rows, expected " +
                                std::to_string(n_rows()));
  columns_.emplace_back(column_name, std::move(values));
}

void TimeSeriesTable::add_metadata(const std::string& key, const std::string& value) {
  metadata_.emplace_back(key, value);
}

const std::vector<std::string> TimeSeriesTable::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const auto& [name, _] : columns_) names.push_back(name);
  return names;
}

const std::vector<double>& TimeSeriesTable::column(const std::string& column_name) const {
  for (const auto& [name, values] : columns_)
    if (name == column_name) return values;
  throw std::invalid_argument("TimeSeriesTable: no column '" + column_name + "'");
}

void TimeSeriesTable::validate() const {
  if (columns_.empty()) throw std::logic_error("TimeSeriesTable: no columns");
  if (n_rows() == 0) throw std::logic_error("TimeSeriesTable: no rows");
  const std::vector<double>& t = columns_.front().second;
  for (size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1]))
      throw std::logic_error("TimeSeriesTable: abscissa not strictly increasing at row " +
                             std::to_string(i));
}

void write_csv(const TimeSeriesTable& table, std::ostream& os) {
  table.validate();
  const auto& cols = table.columns();
  for (size_t c = 0; c < cols.size(); ++c) {
    if (c) os << ',';
    os << csv_escape(cols[c].first);
  }
  os << '\n';
  const size_t rows = table.n_rows();
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c) os << ',';
      os << format_double(cols[c].second[r]);
    }
    os << '\n';
  }
}

void write_json(const TimeSeriesTable& table, std::ostream& os) {
  table.validate();
  nlohmann::ordered_json doc;
  doc["name"] = table.name();
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata()) meta[key] = value;
  doc["metadata"] = meta;
  nlohmann::ordered_json columns = nlohmann::ordered_json::object();
  for (const auto& [name, values] : table.columns()) columns[name] = values;
  doc["columns"] = columns;
  os << doc.dump(2) << '\n';
}

}  // namespace djc
