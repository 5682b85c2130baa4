#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "corrtree/bootstrap.hpp"
#include "corrtree/linkage.hpp"

namespace corrtree::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDataError = 2, kRuntimeError = 3 };

struct Window {
  std::string start;
  std::string end;
};

struct RunConfig {
  std::filesystem::path input;
  char delimiter = ',';
  std::vector<Window> windows;  // empty: whole panel
  std::vector<LinkageMethod> linkages{LinkageMethod::single, LinkageMethod::average};
  std::size_t replicas = kDefaultReplicas;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir;
  std::vector<std::string> formats{"dot", "newick", "json", "tsv"};
  std::optional<double> cut_height;
  Execution exec = Execution::parallel;
};

/// Relative file name -> contents, for one window.
using ArtifactSet = std::map<std::string, std::string>;

/// Directory name used for a window ("full" when the whole panel is used).
std::string window_directory(const std::optional<Window>& window);

/// Runs the pipeline for one window entirely in memory.
ArtifactSet build_window_artifacts(const RunConfig& config, const TimeSeriesPanel& panel,
                                   const std::optional<Window>& window);

/// Loads the input, builds every window, then writes all files. On failure
/// nothing created by this call is left behind. Throws on error.
std::vector<std::filesystem::path> run(const RunConfig& config);

/// Parses argv, runs, reports a one-line diagnostic on `err`, returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace corrtree::cli
