#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

namespace corrtree::testing {

std::vector<Edge> prufer_decode(const std::vector<std::size_t>& seq, std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto v : seq) ++degree[v];
  std::vector<Edge> edges;
  for (auto v : seq) {
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, v);
        --degree[leaf];
        --degree[v];
        break;
      }
    }
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] == 1) rest.push_back(i);
  }
  edges.emplace_back(rest[0], rest[1]);
  return edges;
}

double brute_force_mst_weight(const SquareMatrix& dist) {
  const std::size_t n = dist.size();
  if (n == 2) return dist(0, 1);
  std::vector<std::size_t> seq(n - 2, 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    // Summed in ascending order so equal edge sets give bit-equal totals.
    std::vector<double> weights;
    for (const auto& [a, b] : prufer_decode(seq, n)) weights.push_back(dist(a, b));
    std::sort(weights.begin(), weights.end());
    double total = 0.0;
    for (double w : weights) total += w;
    best = std::min(best, total);
    std::size_t k = 0;
    while (k < seq.size() && ++seq[k] == n) seq[k++] = 0;
    if (k == seq.size()) break;
  }
  return best;
}

SquareMatrix path_max_oracle(std::size_t n, const std::vector<std::pair<Edge, double>>& edges) {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const auto& [e, w] : edges) {
    adj[e.first].emplace_back(e.second, w);
    adj[e.second].emplace_back(e.first, w);
  }
  // Depth-first search for the path target, collecting edge weights.
  std::function<bool(std::size_t, std::size_t, std::size_t, std::vector<double>&)> find_path =
      [&](std::size_t node, std::size_t parent, std::size_t target, std::vector<double>& path) {
        if (node == target) return true;
        for (const auto& [next, w] : adj[node]) {
          if (next == parent) continue;
          path.push_back(w);
          if (find_path(next, node, target, path)) return true;
          path.pop_back();
        }
        return false;
      };
  SquareMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<double> path;
      find_path(i, n, j, path);
      out.set_symmetric(i, j, *std::max_element(path.begin(), path.end()));
    }
  }
  return out;
}

std::vector<double> naive_average_linkage_heights(const SquareMatrix& dist) {
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < dist.size(); ++i) clusters.push_back({i});
  std::vector<double> heights;
  while (clusters.size() > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    std::size_t bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        double sum = 0.0;
        for (auto a : clusters[i]) {
          for (auto b : clusters[j]) sum += dist(a, b);
        }
        const double mean = sum / static_cast<double>(clusters[i].size() * clusters[j].size());
        if (mean < best) {
          best = mean;
          bi = i;
          bj = j;
        }
      }
    }
    heights.push_back(best);
    clusters[bi].insert(clusters[bi].end(), clusters[bj].begin(), clusters[bj].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(bj));
  }
  return heights;
}

double raw_moment_pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double t = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    syy += y[k] * y[k];
    sxy += x[k] * y[k];
  }
  const double mx = sx / t, my = sy / t;
  return (sxy / t - mx * my) / std::sqrt((sxx / t - mx * mx) * (syy / t - my * my));
}

Symbols make_symbols(std::size_t n) {
  Symbols s;
  for (std::size_t i = 0; i < n; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "S%02zu", i);
    s.emplace_back(buf);
  }
  return s;
}

SquareMatrix random_distance_values(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.05, 2.0);
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set_symmetric(i, j, u(rng));
  }
  return m;
}

DistanceMatrix random_distance_matrix(std::size_t n, std::mt19937_64& rng) {
  return DistanceMatrix{make_symbols(n), random_distance_values(n, rng)};
}

ReturnPanel random_returns(std::size_t n, std::size_t rows, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 0.02);
  std::vector<double> v(n * rows);
  for (auto& x : v) x = g(rng);
  return ReturnPanel(make_symbols(n), rows, std::move(v));
}

ReturnPanel latent_arc_returns(std::size_t n, std::size_t rows, double sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> x(rows), y(rows);
  for (std::size_t t = 0; t < rows; ++t) {
    x[t] = g(rng);
    y[t] = g(rng);
  }
  std::vector<double> v(n * rows);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = std::numbers::pi / 2 * static_cast<double>(k) / static_cast<double>(n - 1);
    for (std::size_t t = 0; t < rows; ++t) {
      v[t * n + k] = 0.01 * (std::cos(theta) * x[t] + std::sin(theta) * y[t] + sigma * g(rng));
    }
  }
  return ReturnPanel(make_symbols(n), rows, std::move(v));
}

TimeSeriesPanel levels_from_returns(const ReturnPanel& returns, std::vector<std::string> labels) {
  const std::size_t n = returns.entities();
  const std::size_t periods = returns.rows() + 1;
  if (labels.empty()) labels = quarter_labels(2000, periods);
  std::vector<double> v(periods * n);
  for (std::size_t i = 0; i < n; ++i) {
    double level = 100.0;
    v[i] = level;
    for (std::size_t t = 0; t < returns.rows(); ++t) {
      level *= std::exp(returns.value(t, i));
      v[(t + 1) * n + i] = level;
    }
  }
  return TimeSeriesPanel(returns.symbols(), std::move(labels), std::move(v));
}

std::vector<std::string> quarter_labels(int first_year, std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < count; ++k) {
    labels.push_back(std::to_string(first_year + static_cast<int>(k / 4)) + "-Q" + std::to_string(k % 4 + 1));
  }
  return labels;
}

}  // namespace corrtree::testing
