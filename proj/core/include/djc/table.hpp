#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace djc {

/// Named real-valued time series: first column is the abscissa (omega_t,
/// strictly increasing), all columns equal length. Metadata entries echo the
/// scenario name and parameters in insertion order.
class TimeSeriesTable {
 public:
  explicit TimeSeriesTable(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  /// Appends a column; throws std::invalid_argument on duplicate name or
  /// length mismatch with existing columns.
  void add_column(const std::string& column_name, std::vector<double> values);
  void add_metadata(const std::string& key, const std::string& value);

  size_t n_columns() const { return columns_.size(); }
  size_t n_rows() const { return columns_.empty() ? 0 : columns_.front().second.size(); }
  const std::vector<std::string> column_names() const;
  const std::vector<double>& column(const std::string& column_name) const;
  const std::vector<std::pair<std::string, std::vector<double>>>& columns() const {
    return columns_;
  }
  const std::vector<std::pair<std::string, std::string>>& metadata() const { return metadata_; }

  /// Checks the table invariants (nonempty, first column strictly
  /// increasing); throws std::logic_error on violation.
  void validate() const;

 private:
  std::string name_;
  std::vector<std::pair<std::string, std::vector<double>>> columns_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

/// Plain CSV: one header row, then data rows; fields quoted RFC-style when
/// they contain separators or quotes. Numbers carry 17 significant digits so
/// doubles round-trip exactly. Metadata is not embedded (JSON carries it).
void write_csv(const TimeSeriesTable& table, std::ostream& os);

/// JSON object with name, metadata (ordered), column names, and row-major
/// data array.
void write_json(const TimeSeriesTable& table, std::ostream& os);

/// One double at CSV precision (17 significant digits).
std::string format_double(double x);

}  // namespace djc
