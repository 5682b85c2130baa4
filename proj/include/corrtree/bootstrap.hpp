#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "corrtree/common.hpp"
#include "corrtree/panel.hpp"
#include "corrtree/tree.hpp"

namespace corrtree {

inline constexpr std::size_t kDefaultReplicas = 1600;
inline constexpr std::string_view kRngName = "mt19937_64/seed_seq(seed,replica)";

struct BootstrapConfig {
  std::size_t replicas = kDefaultReplicas;
  std::uint64_t seed = 0;
};

struct LinkReliability {
  std::string a;
  std::string b;
  /// Replicas whose MST contains the link.
  std::size_t hits = 0;
  double reliability = 0.0;

  friend bool operator==(const LinkReliability&, const LinkReliability&) = default;
};

struct BootstrapReport {
  BootstrapConfig config;
  std::string rng{kRngName};
  std::size_t degenerate_replicas = 0;
  /// Original MST links sorted by (a, b).
  std::vector<LinkReliability> links;

  std::size_t valid_replicas() const { return config.replicas - degenerate_replicas; }
  /// Throws std::out_of_range if the pair is not an original MST link.
  double reliability(const LinkKey& link) const;
};

struct BootstrapResult {
  SpanningTree tree;  // edges carry reliabilities
  BootstrapReport report;
};

/// More than 10% of replicas had a zero-variance column.
class BootstrapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Independent random substream of one replica, keyed by (seed, replica index).
class ReplicaStream {
 public:
  ReplicaStream(std::uint64_t seed, std::uint64_t replica);

  /// Uniform integer in [0, bound), by rejection; identical on every platform.
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

/// `rows` indices drawn uniformly with replacement from [0, rows).
std::vector<std::size_t> draw_row_indices(std::size_t rows, ReplicaStream& stream);

/// Efron resample of whole time points (rows), same row count as the input.
ReturnPanel resample_rows(const ReturnPanel& returns, ReplicaStream& stream);

BootstrapResult link_reliability(const ReturnPanel& returns, const BootstrapConfig& config,
                                 Execution exec = Execution::parallel);

}  // namespace corrtree
