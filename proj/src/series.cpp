#include "pai/series.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pai/core.hpp"

namespace pai {

std::string_view to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::OmegaSweep: return "omega_sweep";
    case SeriesKind::DeltaSweep: return "delta_sweep";
    case SeriesKind::ThetaSweep: return "theta_sweep";
    case SeriesKind::BandScan: return "band_scan";
    case SeriesKind::Populations: return "populations";
  }
  return "unknown";
}

SweepSeries::SweepSeries(SeriesKind kind, std::vector<std::string> columns)
    : kind_(kind), columns_(std::move(columns)) {}

void SweepSeries::append(double x, std::vector<double> values) {
  if (values.size() != columns_.size()) {
    throw std::invalid_argument("record width does not match the column set");
  }
  if (!records_.empty() && !(x > records_.back().x)) {
    throw std::invalid_argument("sweep x values must be strictly increasing");
  }
  records_.push_back({x, std::move(values)});
}

std::size_t SweepSeries::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw std::out_of_range("no column named " + std::string(name));
}

std::vector<double> SweepSeries::column(std::string_view name) const {
  const std::size_t idx = column_index(name);
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.values[idx]);
  return out;
}

std::vector<double> SweepSeries::xs() const {
  std::vector<double> out;
  out.reserve(records_.size());
  for (const auto& r : records_) out.push_back(r.x);
  return out;
}

SweepSeries SweepSeries::without_column(std::string_view name) const {
  std::size_t drop = columns_.size();
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) drop = i;
  }
  if (drop == columns_.size()) return *this;

  std::vector<std::string> cols = columns_;
  cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(drop));
  SweepSeries out(kind_, std::move(cols));
  for (const auto& r : records_) {
    std::vector<double> v = r.values;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(drop));
    out.records_.push_back({r.x, std::move(v)});
  }
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") return "0";
  return s;
}

namespace {

std::string_view units_line(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::OmegaSweep:
      return "# x: Raman coupling Omega/E_r; ratios k_sup/k_00 dimensionless";
    case SeriesKind::DeltaSweep:
      return "# x: detuning delta/E_r; ratios k_sup/k_00 dimensionless; q_star in k_r";
    case SeriesKind::ThetaSweep:
      return "# x: rotation angle theta_y in rad; ratios k_sup/k_00 and populations dimensionless";
    case SeriesKind::BandScan:
      return "# x: quasimomentum q/k_r; energy in E_r";
    case SeriesKind::Populations:
      return "# x: rotation angle theta_y in rad; populations dimensionless";
  }
  return "#";
}

}  // namespace

void emit_csv(const SweepSeries& series, std::ostream& out, const CsvOptions& options) {
  std::string text;
  if (options.units_comment) {
    text += units_line(series.kind());
    text += '\n';
  }
  text += 'x';
  for (const auto& c : series.columns()) {
    text += ',';
    text += c;
  }
  text += '\n';
  for (const auto& r : series.records()) {
    text += format_number(r.x);
    for (double v : r.values) {
      text += ',';
      text += format_number(v);
    }
    text += '\n';
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw Error(Errc::Io, "failed to write CSV output");
}

std::string to_csv(const SweepSeries& series, const CsvOptions& options) {
  std::ostringstream os;
  emit_csv(series, os, options);
  return os.str();
}

}  // namespace pai
