#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "corrtree/common.hpp"

namespace corrtree {

/// Levels P_i(t) of N entities over T ordered periods. Values are stored
/// row-major (one row per period). Immutable after construction.
class TimeSeriesPanel {
 public:
  /// Validates every invariant; throws ValidationError on violation.
  TimeSeriesPanel(Symbols symbols, std::vector<std::string> time_labels,
                  std::vector<double> values);

  const Symbols& symbols() const { return symbols_; }
  const std::vector<std::string>& time_labels() const { return time_labels_; }
  std::size_t entities() const { return symbols_.size(); }
  std::size_t periods() const { return time_labels_.size(); }
  double value(std::size_t t, std::size_t i) const { return values_[t * entities() + i]; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const TimeSeriesPanel&, const TimeSeriesPanel&) = default;

 private:
  Symbols symbols_;
  std::vector<std::string> time_labels_;
  std::vector<double> values_;
};

/// Log-returns R_i(t) = ln P_i(t+1) - ln P_i(t), shape (T-1) x N.
class ReturnPanel {
 public:
  ReturnPanel(Symbols symbols, std::size_t rows, std::vector<double> values);

  const Symbols& symbols() const { return symbols_; }
  std::size_t entities() const { return symbols_.size(); }
  std::size_t rows() const { return rows_; }
  double value(std::size_t t, std::size_t i) const { return values_[t * entities() + i]; }
  const std::vector<double>& values() const { return values_; }

  friend bool operator==(const ReturnPanel&, const ReturnPanel&) = default;

 private:
  Symbols symbols_;
  std::size_t rows_;
  std::vector<double> values_;
};

struct PanelFormat {
  char delimiter = ',';
};

/// Reads a header-bearing delimited table: first column period labels,
/// remaining columns one entity each. Missing cells are rejected.
TimeSeriesPanel load_panel(std::istream& source, const PanelFormat& format = {});

/// Contiguous sub-panel between two labels, inclusive.
TimeSeriesPanel slice_window(const TimeSeriesPanel& panel, std::string_view start,
                             std::string_view end);

ReturnPanel log_returns(const TimeSeriesPanel& panel);

}  // namespace corrtree
