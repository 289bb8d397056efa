#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pai {

enum class SeriesKind { OmegaSweep, DeltaSweep, ThetaSweep, BandScan, Populations };

std::string_view to_string(SeriesKind kind) noexcept;

struct SweepRecord {
  double x = 0.0;
  std::vector<double> values;
};

/// Ordered 1-D curve data: strictly increasing x, one value per named column.
class SweepSeries {
 public:
  SweepSeries(SeriesKind kind, std::vector<std::string> columns);

  SeriesKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<SweepRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }

  /// Throws std::invalid_argument if x does not increase or the width is wrong.
  void append(double x, std::vector<double> values);

  /// Index of `name`; throws std::out_of_range if absent.
  std::size_t column_index(std::string_view name) const;
  std::vector<double> column(std::string_view name) const;
  std::vector<double> xs() const;

  /// Copy without the named column (no-op if absent).
  SweepSeries without_column(std::string_view name) const;

 private:
  SeriesKind kind_;
  std::vector<std::string> columns_;
  std::vector<SweepRecord> records_;
};

struct CsvOptions {
  /// Prepend a `#` line describing the units of x and the columns.
  bool units_comment = false;
};

/// 12 significant digits, shortest %g form, "-0" printed as "0".
std::string format_number(double v);

/// Header `x,<col>,...` then one LF-terminated line per record.
/// Throws IoError if the stream goes bad.
void emit_csv(const SweepSeries& series, std::ostream& out, const CsvOptions& options = {});
std::string to_csv(const SweepSeries& series, const CsvOptions& options = {});

}  // namespace pai
