#include "corrtree/bootstrap.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "corrtree/metric.hpp"

namespace corrtree {

namespace {

std::seed_seq replica_seed(std::uint64_t seed, std::uint64_t replica) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(replica), hi(replica)};
}

struct ReplicaOutcome {
  bool degenerate = false;
  std::vector<unsigned char> present;  // one flag per original link
};

// Runs one replica: resample rows, rebuild the MST, flag original links.
ReplicaOutcome run_replica(const ReturnPanel& returns, const BootstrapConfig& config, std::size_t replica,
                           const std::vector<std::pair<std::size_t, std::size_t>>& tie_order,
                           const std::vector<std::pair<std::size_t, std::size_t>>& original) {
  ReplicaOutcome outcome;
  ReplicaStream stream(config.seed, replica);
  const auto rows = draw_row_indices(returns.rows(), stream);
  CorrelationMatrix corr;
  if (!try_correlation_matrix(returns, rows, corr)) {
    outcome.degenerate = true;
    return outcome;
  }
  const auto dist = distance_matrix(corr);
  const auto chosen = kruskal_pairs(dist.values, tie_order);

  const std::size_t n = returns.entities();
  std::vector<unsigned char> adjacent(n * n, 0);
  for (const auto& [i, j] : chosen) {
    adjacent[i * n + j] = 1;
    adjacent[j * n + i] = 1;
  }
  outcome.present.resize(original.size());
  for (std::size_t k = 0; k < original.size(); ++k) {
    outcome.present[k] = adjacent[original[k].first * n + original[k].second];
  }
  return outcome;
}

}  // namespace

double BootstrapReport::reliability(const LinkKey& link) const {
  for (const auto& l : links) {
    if (l.a == link.first && l.b == link.second) return l.reliability;
  }
  throw std::out_of_range("link " + link.first + "-" + link.second + " is not in the original MST");
}

ReplicaStream::ReplicaStream(std::uint64_t seed, std::uint64_t replica) {
  auto seq = replica_seed(seed, replica);
  engine_.seed(seq);
}

std::size_t ReplicaStream::below(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("ReplicaStream::below: bound must be positive");
  const std::uint64_t b = bound;
  // 2^64 mod b; draws under it would bias the modulo.
  const std::uint64_t threshold = (0 - b) % b;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return static_cast<std::size_t>(x % b);
  }
}

std::vector<std::size_t> draw_row_indices(std::size_t rows, ReplicaStream& stream) {
  std::vector<std::size_t> index(rows);
  for (auto& r : index) r = stream.below(rows);
  return index;
}

ReturnPanel resample_rows(const ReturnPanel& returns, ReplicaStream& stream) {
  const std::size_t n = returns.entities();
  const auto index = draw_row_indices(returns.rows(), stream);
  std::vector<double> values;
  values.reserve(returns.values().size());
  for (std::size_t r : index) {
    const auto row = returns.values().begin() + static_cast<std::ptrdiff_t>(r * n);
    values.insert(values.end(), row, row + static_cast<std::ptrdiff_t>(n));
  }
  return ReturnPanel(returns.symbols(), returns.rows(), std::move(values));
}

BootstrapResult link_reliability(const ReturnPanel& returns, const BootstrapConfig& config, Execution exec) {
  if (config.replicas < 1) throw std::invalid_argument("bootstrap needs at least one replica");

  const auto corr = correlation_matrix(returns, exec);
  BootstrapResult result{kruskal_mst(distance_matrix(corr)), {}};
  result.report.config = config;

  const auto& symbols = returns.symbols();
  const auto tie_order = canonical_pair_order(symbols);

  // Original links as index pairs, in report order (a, b).
  std::vector<LinkKey> keys;
  for (const auto& e : result.tree.edges) keys.emplace_back(e.a, e.b);
  std::sort(keys.begin(), keys.end());
  std::vector<std::pair<std::size_t, std::size_t>> original;
  for (const auto& [a, b] : keys) {
    const auto ia = static_cast<std::size_t>(std::find(symbols.begin(), symbols.end(), a) - symbols.begin());
    const auto ib = static_cast<std::size_t>(std::find(symbols.begin(), symbols.end(), b) - symbols.begin());
    original.emplace_back(ia, ib);
  }

  std::vector<ReplicaOutcome> outcomes(config.replicas);
  const auto replicas = static_cast<std::ptrdiff_t>(config.replicas);
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t r = 0; r < replicas; ++r) {
      outcomes[static_cast<std::size_t>(r)] =
          run_replica(returns, config, static_cast<std::size_t>(r), tie_order, original);
    }
  } else {
    for (std::ptrdiff_t r = 0; r < replicas; ++r) {
      outcomes[static_cast<std::size_t>(r)] =
          run_replica(returns, config, static_cast<std::size_t>(r), tie_order, original);
    }
  }

  std::vector<std::size_t> hits(original.size(), 0);
  std::size_t degenerate = 0;
  for (const auto& o : outcomes) {
    if (o.degenerate) {
      ++degenerate;
      continue;
    }
    for (std::size_t k = 0; k < hits.size(); ++k) hits[k] += o.present[k];
  }
  if (degenerate * 10 > config.replicas) {
    throw BootstrapError(std::to_string(degenerate) + " of " + std::to_string(config.replicas) +
                         " bootstrap replicas had a zero-variance series (limit 10%)");
  }

  auto& report = result.report;
  report.degenerate_replicas = degenerate;
  const double valid = static_cast<double>(report.valid_replicas());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    report.links.push_back(
        LinkReliability{keys[k].first, keys[k].second, hits[k], static_cast<double>(hits[k]) / valid});
  }
  for (auto& e : result.tree.edges) e.reliability = report.reliability({e.a, e.b});
  return result;
}

}  // namespace corrtree
