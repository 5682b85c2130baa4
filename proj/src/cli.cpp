#include "corrtree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corrtree/io.hpp"
#include "corrtree/metric.hpp"
#include "corrtree/panel.hpp"
#include "corrtree/version.hpp"

namespace corrtree::cli {

namespace fs = std::filesystem;

namespace {

bool wants(const RunConfig& config, std::string_view format) {
  return std::find(config.formats.begin(), config.formats.end(), format) != config.formats.end();
}

std::string sanitize(std::string_view label) {
  std::string out(label);
  for (char& c : out) {
    const bool keep = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
                      c == '.' || c == '_';
    if (!keep) c = '_';
  }
  return out;
}

std::string manifest_json(const RunConfig& config, const TimeSeriesPanel& panel,
                          const std::optional<Window>& window, const CorrelationMatrix& corr,
                          const BootstrapResult& boot, const ArtifactSet& files) {
  io::JsonWriter w;
  w.begin_object()
      .key("tool")
      .value(std::string(kToolName))
      .key("version")
      .value(std::string(kVersion))
      .key("input")
      .value(config.input.filename().string())
      .key("delimiter")
      .value(std::string(1, config.delimiter))
      .key("window");
  if (window) {
    w.begin_object().key("start").value(window->start).key("end").value(window->end).end_object();
  } else {
    w.null();
  }
  std::vector<std::string> linkages;
  for (auto m : config.linkages) linkages.emplace_back(to_string(m));
  std::vector<std::string> names;
  for (const auto& [name, body] : files) names.push_back(name);
  names.push_back("manifest.json");
  std::sort(names.begin(), names.end());

  w.key("first_period")
      .value(panel.time_labels().front())
      .key("last_period")
      .value(panel.time_labels().back())
      .key("periods")
      .value(std::uint64_t{panel.periods()})
      .key("return_rows")
      .value(std::uint64_t{panel.periods() - 1})
      .key("entities")
      .value(std::uint64_t{panel.entities()})
      .key("symbols")
      .inline_array(panel.symbols())
      .key("linkage")
      .inline_array(linkages)
      .key("formats")
      .inline_array(config.formats)
      .key("replicas")
      .value(std::uint64_t{config.replicas})
      .key("seed")
      .value(std::uint64_t{config.seed})
      .key("rng")
      .value(boot.report.rng)
      .key("degenerate_replicas")
      .value(std::uint64_t{boot.report.degenerate_replicas})
      .key("clamped_pairs")
      .value(std::uint64_t{corr.clamped_pairs})
      .key("mst_length")
      .value(tree_length(boot.tree));
  if (config.cut_height) w.key("cut_height").value(*config.cut_height);
  w.key("files").inline_array(names).end_object();
  return w.str();
}

std::optional<Window> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size() ||
      text.find(':', colon + 1) != std::string::npos) {
    throw CLI::ValidationError("--window", "expected START:END, got \"" + text + "\"");
  }
  return Window{text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

std::string window_directory(const std::optional<Window>& window) {
  if (!window) return "full";
  return sanitize(window->start) + "_" + sanitize(window->end);
}

ArtifactSet build_window_artifacts(const RunConfig& config, const TimeSeriesPanel& full,
                                   const std::optional<Window>& window) {
  const TimeSeriesPanel panel = window ? slice_window(full, window->start, window->end) : full;
  const auto returns = log_returns(panel);
  const auto corr = correlation_matrix(returns, config.exec);
  const auto dist = distance_matrix(corr);
  const auto boot = link_reliability(returns, BootstrapConfig{config.replicas, config.seed}, config.exec);

  ArtifactSet files;
  if (wants(config, "tsv")) {
    files["correlation.tsv"] = io::matrix_to_delimited(corr.symbols, corr.values);
    files["distance.tsv"] = io::matrix_to_delimited(dist.symbols, dist.values);
  }
  if (wants(config, "json")) {
    files["correlation.json"] = io::matrix_to_json(corr.symbols, corr.values);
    files["distance.json"] = io::matrix_to_json(dist.symbols, dist.values);
    files["mst.json"] = io::tree_to_json(boot.tree);
  }
  if (wants(config, "dot")) files["mst.dot"] = io::tree_to_dot(boot.tree);
  for (auto method : config.linkages) {
    const auto dendrogram = build_dendrogram(dist, method);
    const std::string stem = "dendrogram_" + std::string(to_string(method));
    if (wants(config, "newick")) files[stem + ".nwk"] = io::dendrogram_to_newick(dendrogram);
    if (wants(config, "json")) files[stem + ".json"] = io::dendrogram_to_json(dendrogram);
    if (config.cut_height) {
      files["clusters_" + std::string(to_string(method)) + ".json"] =
          io::partition_to_json(cut(dendrogram, *config.cut_height));
    }
  }
  files["bootstrap.json"] = io::bootstrap_report_to_json(boot.report);
  files["manifest.json"] = manifest_json(config, panel, window, corr, boot, files);
  return files;
}

std::vector<fs::path> run(const RunConfig& config) {
  if (config.formats.empty()) throw std::invalid_argument("at least one export format is required");

  std::ifstream in(config.input);
  if (!in) throw ValidationError("cannot open input \"" + config.input.string() + "\"");
  const auto panel = load_panel(in, PanelFormat{config.delimiter});

  std::vector<std::optional<Window>> windows;
  if (config.windows.empty()) windows.emplace_back(std::nullopt);
  for (const auto& w : config.windows) windows.emplace_back(w);

  std::vector<std::pair<std::string, ArtifactSet>> outputs;
  std::set<std::string> dirs;
  for (const auto& w : windows) {
    auto dir = window_directory(w);
    if (!dirs.insert(dir).second) throw std::invalid_argument("duplicate window \"" + dir + "\"");
    outputs.emplace_back(std::move(dir), build_window_artifacts(config, panel, w));
  }

  // Everything is computed; now write, undoing on any I/O failure.
  std::vector<fs::path> created;
  try {
    std::vector<fs::path> missing;
    for (auto p = config.out_dir; !p.empty() && !fs::exists(p); p = p.parent_path()) {
      missing.push_back(p);
      if (p == p.parent_path()) break;
    }
    fs::create_directories(config.out_dir);
    created.insert(created.end(), missing.rbegin(), missing.rend());
    std::vector<fs::path> written;
    for (const auto& [dir, files] : outputs) {
      const auto window_dir = config.out_dir / dir;
      if (!fs::exists(window_dir)) {
        fs::create_directory(window_dir);
        created.push_back(window_dir);
      }
      for (const auto& [name, body] : files) {
        const auto path = window_dir / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        created.push_back(path);
        out << body;
        out.close();
        if (!out) throw std::runtime_error("failed writing \"" + path.string() + "\"");
        written.push_back(path);
      }
    }
    return written;
  } catch (...) {
    std::error_code ec;
    for (auto it = created.rbegin(); it != created.rend(); ++it) fs::remove(*it, ec);
    throw;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlation-based minimal spanning trees, hierarchical trees and bootstrap link reliability"};
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig config;
  std::string delimiter = ",";
  std::vector<std::string> windows;
  std::vector<std::string> linkages{"single", "average"};
  std::optional<double> cut_height;
  int threads = 0;
  bool serial = false;

  app.add_option("--input", config.input, "Panel file: header row of symbols, one row per period")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--delimiter", delimiter, "Input field delimiter")->capture_default_str();
  app.add_option("--window", windows, "Period window START:END (repeatable)")->take_all();
  app.add_option("--linkage", linkages, "Linkage methods")
      ->delimiter(',')
      ->check(CLI::IsMember({"single", "average"}))
      ->capture_default_str();
  app.add_option("--replicas", config.replicas, "Bootstrap replicas")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Bootstrap seed (u64)")->capture_default_str();
  app.add_option("--out", config.out_dir, "Output directory")->required();
  app.add_option("--formats", config.formats, "Export formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"dot", "newick", "json", "tsv"}))
      ->capture_default_str();
  app.add_option("--cut", cut_height, "Also write flat clusters cut at this height")->check(CLI::NonNegativeNumber);
  app.add_option("--threads", threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", serial, "Use the serial reference kernels");

  try {
    app.parse(argc, argv);
    if (delimiter.size() != 1) throw CLI::ValidationError("--delimiter", "must be a single character");
    config.delimiter = delimiter[0];
    for (const auto& w : windows) config.windows.push_back(*parse_window(w));
    config.linkages.clear();
    for (const auto& l : linkages) {
      const auto m = parse_linkage_method(l);
      if (std::find(config.linkages.begin(), config.linkages.end(), m) == config.linkages.end()) {
        config.linkages.push_back(m);
      }
    }
    if (config.formats.empty()) throw CLI::ValidationError("--formats", "at least one format is required");
    config.cut_height = cut_height;
    config.exec = serial ? Execution::serial : Execution::parallel;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    const auto files = run(config);
    out << "wrote " << files.size() << " files under " << config.out_dir.string() << "\n";
    return kSuccess;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeError;
  }
}

}  // namespace corrtree::cli
