#include "corrtree/panel.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace corrtree {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(delimiter, pos);
    cells.push_back(trim(line.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return cells;
}

std::string cell_location(std::size_t row, const std::string& symbol) {
  return "row " + std::to_string(row) + ", column \"" + symbol + "\"";
}

}  // namespace

TimeSeriesPanel::TimeSeriesPanel(Symbols symbols, std::vector<std::string> time_labels,
                                 std::vector<double> values)
    : symbols_(std::move(symbols)), time_labels_(std::move(time_labels)), values_(std::move(values)) {
  if (symbols_.size() < 2) {
    throw ValidationError("panel needs at least 2 entities, got " + std::to_string(symbols_.size()));
  }
  if (time_labels_.size() < 3) {
    throw ValidationError("panel needs at least 3 periods, got " + std::to_string(time_labels_.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw ValidationError("empty entity symbol");
    if (!seen.insert(s).second) throw ValidationError("duplicate symbol \"" + s + "\"");
  }
  std::set<std::string_view> seen_labels;
  for (const auto& label : time_labels_) {
    if (label.empty()) throw ValidationError("empty period label");
    if (!seen_labels.insert(label).second) {
      throw ValidationError("duplicate period label \"" + label + "\"");
    }
  }
  if (values_.size() != symbols_.size() * time_labels_.size()) {
    throw ValidationError("panel value count does not match periods x entities");
  }
  for (std::size_t t = 0; t < periods(); ++t) {
    for (std::size_t i = 0; i < entities(); ++i) {
      const double v = value(t, i);
      if (!std::isfinite(v) || v <= 0.0) {
        throw ValidationError(cell_location(t + 1, symbols_[i]) + ": level must be finite and > 0");
      }
    }
  }
}

ReturnPanel::ReturnPanel(Symbols symbols, std::size_t rows, std::vector<double> values)
    : symbols_(std::move(symbols)), rows_(rows), values_(std::move(values)) {
  if (values_.size() != rows_ * symbols_.size()) {
    throw ValidationError("return value count does not match rows x entities");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("non-finite log-return");
  }
}

TimeSeriesPanel load_panel(std::istream& source, const PanelFormat& format) {
  std::string line;
  if (!std::getline(source, line)) throw ValidationError("empty input: missing header row");

  auto header = split(line, format.delimiter);
  if (header.size() < 3) {
    throw ValidationError("header must have a label column and at least 2 entity columns");
  }
  Symbols symbols;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) throw ValidationError("empty symbol in header column " + std::to_string(c + 1));
    symbols.emplace_back(header[c]);
  }
  {
    std::set<std::string_view> seen;
    for (const auto& s : symbols) {
      if (!seen.insert(s).second) throw ValidationError("duplicate symbol \"" + s + "\"");
    }
  }

  std::vector<std::string> labels;
  std::vector<double> values;
  std::size_t row = 0;
  while (std::getline(source, line)) {
    if (trim(line).empty()) continue;
    ++row;
    const auto cells = split(line, format.delimiter);
    if (cells.size() != header.size()) {
      throw ValidationError("row " + std::to_string(row) + ": expected " + std::to_string(header.size()) +
                            " cells, got " + std::to_string(cells.size()));
    }
    labels.emplace_back(cells[0]);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const auto cell = cells[c];
      const auto& symbol = symbols[c - 1];
      if (cell.empty()) throw ValidationError(cell_location(row, symbol) + ": missing value");
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
        throw ValidationError(cell_location(row, symbol) + ": not a number: \"" + std::string(cell) + "\"");
      }
      if (v <= 0.0) {
        throw ValidationError(cell_location(row, symbol) + ": level must be > 0, got " + std::string(cell));
      }
      values.push_back(v);
    }
  }
  if (labels.size() < 3) {
    throw ValidationError("panel needs at least 3 periods, got " + std::to_string(labels.size()));
  }
  return TimeSeriesPanel(std::move(symbols), std::move(labels), std::move(values));
}

TimeSeriesPanel slice_window(const TimeSeriesPanel& panel, std::string_view start, std::string_view end) {
  const auto& labels = panel.time_labels();
  auto position = [&](std::string_view label) {
    for (std::size_t t = 0; t < labels.size(); ++t) {
      if (labels[t] == label) return t;
    }
    throw ValidationError("period label \"" + std::string(label) + "\" not in panel");
  };
  const std::size_t first = position(start);
  const std::size_t last = position(end);
  if (last < first) {
    throw ValidationError("window end \"" + std::string(end) + "\" precedes start \"" + std::string(start) + "\"");
  }
  const std::size_t rows = last - first + 1;
  if (rows < 3) {
    throw ValidationError("window " + std::string(start) + ":" + std::string(end) + " has " +
                          std::to_string(rows) + " periods, need at least 3");
  }
  const std::size_t n = panel.entities();
  std::vector<std::string> sub_labels(labels.begin() + first, labels.begin() + last + 1);
  std::vector<double> sub_values(panel.values().begin() + first * n, panel.values().begin() + (last + 1) * n);
  return TimeSeriesPanel(panel.symbols(), std::move(sub_labels), std::move(sub_values));
}

ReturnPanel log_returns(const TimeSeriesPanel& panel) {
  const std::size_t n = panel.entities();
  const std::size_t rows = panel.periods() - 1;
  std::vector<double> out(rows * n);
  for (std::size_t t = 0; t < rows; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      out[t * n + i] = std::log(panel.value(t + 1, i)) - std::log(panel.value(t, i));
    }
  }
  return ReturnPanel(panel.symbols(), rows, std::move(out));
}

}  // namespace corrtree
