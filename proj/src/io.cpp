#include "corrtree/io.hpp"

#include <charconv>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace corrtree::io {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::vector<std::string> split(const std::string& line, char delimiter) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, delimiter)) {
    if (!cell.empty() && cell.back() == '\r') cell.pop_back();
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == delimiter) cells.emplace_back();
  return cells;
}

double parse_number(const std::string& cell) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw ValidationError("matrix cell is not a number: \"" + cell + "\"");
  }
  return v;
}

}  // namespace

// ---- JsonWriter -------------------------------------------------------------

void JsonWriter::newline() {
  out_ += '\n';
  out_.append(2 * has_items_.size(), ' ');
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (has_items_.empty()) return;
  if (has_items_.back()) out_ += ',';
  newline();
  has_items_.back() = true;
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  out_ += '{';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool had_items = has_items_.back();
  has_items_.pop_back();
  if (had_items) newline();
  out_ += '}';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  out_ += '[';
  has_items_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const bool had_items = has_items_.back();
  has_items_.pop_back();
  if (had_items) newline();
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  if (has_items_.back()) out_ += ',';
  newline();
  has_items_.back() = true;
  out_ += quoted(name);
  out_ += ": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& s) {
  before_value();
  out_ += quoted(s);
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  before_value();
  out_ += format_fixed6(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t n) {
  before_value();
  out_ += std::to_string(n);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  before_value();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::null() {
  before_value();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::inline_array(const std::vector<double>& xs) {
  before_value();
  out_ += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out_ += ", ";
    out_ += format_fixed6(xs[i]);
  }
  out_ += ']';
  return *this;
}

JsonWriter& JsonWriter::inline_array(const std::vector<std::string>& xs) {
  before_value();
  out_ += '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out_ += ", ";
    out_ += quoted(xs[i]);
  }
  out_ += ']';
  return *this;
}

// ---- matrices ---------------------------------------------------------------

std::string matrix_to_delimited(const Symbols& symbols, const SquareMatrix& values, char delimiter) {
  std::string out;
  for (const auto& s : symbols) {
    out += delimiter;
    out += s;
  }
  out += '\n';
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out += symbols[i];
    for (std::size_t j = 0; j < symbols.size(); ++j) {
      out += delimiter;
      out += format_fixed6(values(i, j));
    }
    out += '\n';
  }
  return out;
}

LabeledMatrix matrix_from_delimited(std::istream& in, char delimiter) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("matrix text is empty");
  auto header = split(line, delimiter);
  if (header.empty()) throw ValidationError("matrix header is empty");
  LabeledMatrix m{Symbols(header.begin() + 1, header.end()), SquareMatrix(header.size() - 1)};
  const std::size_t n = m.symbols.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw ValidationError("matrix text has too few rows");
    const auto cells = split(line, delimiter);
    if (cells.size() != n + 1 || cells[0] != m.symbols[i]) {
      throw ValidationError("matrix row " + std::to_string(i + 1) + " is malformed");
    }
    for (std::size_t j = 0; j < n; ++j) m.values(i, j) = parse_number(cells[j + 1]);
  }
  return m;
}

std::string matrix_to_json(const Symbols& symbols, const SquareMatrix& values) {
  JsonWriter w;
  w.begin_object().key("symbols").inline_array(symbols).key("rows").begin_array();
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    std::vector<double> row(values.raw().begin() + static_cast<std::ptrdiff_t>(i * symbols.size()),
                            values.raw().begin() + static_cast<std::ptrdiff_t>((i + 1) * symbols.size()));
    w.inline_array(row);
  }
  w.end_array().end_object();
  return w.str();
}

LabeledMatrix matrix_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  LabeledMatrix m{doc.at("symbols").get<Symbols>(), {}};
  const auto& rows = doc.at("rows");
  const std::size_t n = m.symbols.size();
  if (rows.size() != n) throw ValidationError("matrix JSON row count does not match symbols");
  m.values = SquareMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ValidationError("matrix JSON row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) m.values(i, j) = rows[i][j].get<double>();
  }
  return m;
}

// ---- trees ------------------------------------------------------------------

std::string tree_to_dot(const SpanningTree& tree) {
  std::string out = "graph mst {\n";
  for (const auto& s : tree.symbols) out += "  " + quoted(s) + ";\n";
  for (const auto& e : tree.edges) {
    out += "  " + quoted(e.a) + " -- " + quoted(e.b) + " [weight=" + format_fixed6(e.weight);
    if (e.reliability) out += ", boot=" + format_fixed6(*e.reliability);
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string tree_to_json(const SpanningTree& tree) {
  JsonWriter w;
  w.begin_object().key("symbols").inline_array(tree.symbols).key("edges").begin_array();
  for (const auto& e : tree.edges) {
    w.begin_object().key("a").value(e.a).key("b").value(e.b).key("weight").value(e.weight).key("boot");
    if (e.reliability) {
      w.value(*e.reliability);
    } else {
      w.null();
    }
    w.end_object();
  }
  w.end_array().end_object();
  return w.str();
}

SpanningTree tree_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  SpanningTree tree{doc.at("symbols").get<Symbols>(), {}};
  for (const auto& e : doc.at("edges")) {
    TreeEdge edge{e.at("a").get<std::string>(), e.at("b").get<std::string>(), e.at("weight").get<double>(),
                  std::nullopt};
    if (!e.at("boot").is_null()) edge.reliability = e.at("boot").get<double>();
    tree.edges.push_back(std::move(edge));
  }
  return tree;
}

// ---- dendrograms ------------------------------------------------------------

std::string newick_label(const std::string& name) {
  if (name.find_first_of(" \t\n()[]':;,") == std::string::npos) return name;
  std::string out = "'";
  for (char c : name) {
    out += c;
    if (c == '\'') out += '\'';
  }
  out += '\'';
  return out;
}

std::string dendrogram_to_newick(const Dendrogram& dendrogram) {
  const std::size_t n = dendrogram.symbols.size();
  if (n == 0) return ";\n";
  if (dendrogram.merges.empty()) return newick_label(dendrogram.symbols[0]) + ";\n";

  auto height_of = [&](std::size_t ref) { return ref < n ? 0.0 : dendrogram.merges[ref - n].height; };
  std::string out;
  std::function<void(std::size_t)> emit = [&](std::size_t ref) {
    if (ref < n) {
      out += newick_label(dendrogram.symbols[ref]);
      return;
    }
    const auto& m = dendrogram.merges[ref - n];
    out += '(';
    emit(m.left);
    out += ':' + format_fixed6(m.height - height_of(m.left)) + ',';
    emit(m.right);
    out += ':' + format_fixed6(m.height - height_of(m.right)) + ')';
  };
  emit(n + dendrogram.merges.size() - 1);
  out += ";\n";
  return out;
}

std::string dendrogram_to_json(const Dendrogram& dendrogram) {
  JsonWriter w;
  w.begin_object()
      .key("method")
      .value(std::string(to_string(dendrogram.method)))
      .key("symbols")
      .inline_array(dendrogram.symbols)
      .key("merges")
      .begin_array();
  for (const auto& m : dendrogram.merges) {
    w.begin_object()
        .key("left")
        .value(std::uint64_t{m.left})
        .key("right")
        .value(std::uint64_t{m.right})
        .key("height")
        .value(m.height)
        .end_object();
  }
  w.end_array().end_object();
  return w.str();
}

std::string partition_to_json(const ClusterPartition& partition) {
  JsonWriter w;
  w.begin_object().key("height").value(partition.height).key("groups").begin_array();
  for (const auto& g : partition.groups) w.inline_array(g);
  w.end_array().end_object();
  return w.str();
}

std::string bootstrap_report_to_json(const BootstrapReport& report) {
  JsonWriter w;
  w.begin_object()
      .key("replicas")
      .value(std::uint64_t{report.config.replicas})
      .key("seed")
      .value(std::uint64_t{report.config.seed})
      .key("rng")
      .value(report.rng)
      .key("degenerate")
      .value(std::uint64_t{report.degenerate_replicas})
      .key("links")
      .begin_array();
  for (const auto& l : report.links) {
    w.begin_object().key("a").value(l.a).key("b").value(l.b).key("reliability").value(l.reliability).end_object();
  }
  w.end_array().end_object();
  return w.str();
}

}  // namespace corrtree::io
