#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "corrtree/bootstrap.hpp"
#include "corrtree/common.hpp"
#include "corrtree/linkage.hpp"
#include "corrtree/tree.hpp"

// Text exports. Every real number is written with format_fixed6, so output
// bytes depend only on the values.

namespace corrtree::io {

struct LabeledMatrix {
  Symbols symbols;
  SquareMatrix values;
};

/// Symbols as header row and first column; empty corner cell.
std::string matrix_to_delimited(const Symbols& symbols, const SquareMatrix& values, char delimiter = '\t');
LabeledMatrix matrix_from_delimited(std::istream& in, char delimiter = '\t');

/// {"symbols": [...], "rows": [[...], ...]}
std::string matrix_to_json(const Symbols& symbols, const SquareMatrix& values);
LabeledMatrix matrix_from_json(const std::string& text);

/// Undirected graph, one edge per link with `weight` and (when known) `boot`.
std::string tree_to_dot(const SpanningTree& tree);
/// {"symbols": [...], "edges": [{"a","b","weight","boot"}]}; boot is null when unknown.
std::string tree_to_json(const SpanningTree& tree);
SpanningTree tree_from_json(const std::string& text);

/// Single line, branch length = parent height - child height.
std::string dendrogram_to_newick(const Dendrogram& dendrogram);
/// {"method", "symbols", "merges": [{"left","right","height"}]}
std::string dendrogram_to_json(const Dendrogram& dendrogram);

/// {"height", "groups": [[...], ...]}
std::string partition_to_json(const ClusterPartition& partition);

/// {"replicas", "seed", "rng", "degenerate", "links": [{"a","b","reliability"}]}
std::string bootstrap_report_to_json(const BootstrapReport& report);

/// Newick label, single-quoted when it contains reserved characters.
std::string newick_label(const std::string& name);

/// Small streaming writer for deterministic, 2-space indented JSON.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(const std::string& s);
  JsonWriter& value(const char* s) { return value(std::string(s)); }
  JsonWriter& value(double x);
  JsonWriter& value(std::uint64_t n);
  JsonWriter& value(bool b);
  JsonWriter& null();
  /// Array of numbers or strings on one line.
  JsonWriter& inline_array(const std::vector<double>& xs);
  JsonWriter& inline_array(const std::vector<std::string>& xs);

  /// Document text with a trailing newline.
  std::string str() const { return out_ + "\n"; }

 private:
  void before_value();
  void newline();

  std::string out_;
  std::vector<bool> has_items_;
  bool after_key_ = false;
};

}  // namespace corrtree::io
