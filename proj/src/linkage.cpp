#include "corrtree/linkage.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "corrtree/tree.hpp"

namespace corrtree {

std::string_view to_string(LinkageMethod method) {
  return method == LinkageMethod::single ? "single" : "average";
}

LinkageMethod parse_linkage_method(std::string_view name) {
  if (name == "single") return LinkageMethod::single;
  if (name == "average") return LinkageMethod::average;
  throw std::invalid_argument("unknown linkage method \"" + std::string(name) + "\"");
}

namespace {

struct ActiveCluster {
  std::size_t id;
  std::vector<std::string> members;  // sorted
};

// Canonical tie-break key of a candidate merge: the two sorted member
// lists, smaller first.
bool tie_key_less(const ActiveCluster& a1, const ActiveCluster& b1, const ActiveCluster& a2,
                  const ActiveCluster& b2) {
  const auto& lo1 = std::min(a1.members, b1.members);
  const auto& hi1 = std::max(a1.members, b1.members);
  const auto& lo2 = std::min(a2.members, b2.members);
  const auto& hi2 = std::max(a2.members, b2.members);
  return std::tie(lo1, hi1) < std::tie(lo2, hi2);
}

}  // namespace

Dendrogram build_dendrogram(const DistanceMatrix& dist, LinkageMethod method) {
  const std::size_t n = dist.symbols.size();
  Dendrogram out{dist.symbols, {}, method};
  if (n < 2) return out;

  std::vector<ActiveCluster> active;
  active.reserve(n);
  for (std::size_t i = 0; i < n; ++i) active.push_back({i, {dist.symbols[i]}});
  // Distances between active clusters, indexed by position in `active`.
  std::vector<std::vector<double>> between(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) between[i][j] = dist.values(i, j);
  }

  while (active.size() > 1) {
    std::size_t best_i = 0;
    std::size_t best_j = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const double d = between[i][j];
        if (d < best || (d == best && tie_key_less(active[i], active[j], active[best_i], active[best_j]))) {
          best = d;
          best_i = i;
          best_j = j;
        }
      }
    }

    auto& x = active[best_i];
    auto& y = active[best_j];
    const bool x_first = x.members < y.members;
    out.merges.push_back(Merge{x_first ? x.id : y.id, x_first ? y.id : x.id, best});

    const double nx = static_cast<double>(x.members.size());
    const double ny = static_cast<double>(y.members.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k == best_i || k == best_j) continue;
      const double merged = method == LinkageMethod::single
                                ? std::min(between[best_i][k], between[best_j][k])
                                : (nx * between[best_i][k] + ny * between[best_j][k]) / (nx + ny);
      between[best_i][k] = merged;
      between[k][best_i] = merged;
    }

    std::vector<std::string> members;
    members.reserve(x.members.size() + y.members.size());
    std::merge(x.members.begin(), x.members.end(), y.members.begin(), y.members.end(),
               std::back_inserter(members));
    x.members = std::move(members);
    x.id = n + out.merges.size() - 1;

    active.erase(active.begin() + static_cast<std::ptrdiff_t>(best_j));
    between.erase(between.begin() + static_cast<std::ptrdiff_t>(best_j));
    for (auto& row : between) row.erase(row.begin() + static_cast<std::ptrdiff_t>(best_j));
  }
  return out;
}

Dendrogram single_linkage(const DistanceMatrix& dist) { return build_dendrogram(dist, LinkageMethod::single); }

Dendrogram average_linkage(const DistanceMatrix& dist) { return build_dendrogram(dist, LinkageMethod::average); }

namespace {

std::vector<std::vector<std::size_t>> leaf_sets(const Dendrogram& dendrogram) {
  const std::size_t n = dendrogram.symbols.size();
  std::vector<std::vector<std::size_t>> sets(n + dendrogram.merges.size());
  for (std::size_t i = 0; i < n; ++i) sets[i] = {i};
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const auto& m = dendrogram.merges[k];
    auto& s = sets[n + k];
    s = sets[m.left];
    s.insert(s.end(), sets[m.right].begin(), sets[m.right].end());
  }
  return sets;
}

}  // namespace

SquareMatrix cophenetic_matrix(const Dendrogram& dendrogram) {
  const std::size_t n = dendrogram.symbols.size();
  SquareMatrix out(n);
  const auto sets = leaf_sets(dendrogram);
  for (const auto& m : dendrogram.merges) {
    for (std::size_t a : sets[m.left]) {
      for (std::size_t b : sets[m.right]) out.set_symmetric(a, b, m.height);
    }
  }
  return out;
}

ClusterPartition cut(const Dendrogram& dendrogram, double height) {
  const std::size_t n = dendrogram.symbols.size();
  // Union leaves through merges at or below the threshold; the first leaf of
  // each cluster reference stands in for the whole cluster.
  std::vector<std::size_t> representative(n + dendrogram.merges.size());
  for (std::size_t i = 0; i < n; ++i) representative[i] = i;
  UnionFind forest(n);
  for (std::size_t k = 0; k < dendrogram.merges.size(); ++k) {
    const auto& m = dendrogram.merges[k];
    representative[n + k] = representative[m.left];
    if (m.height <= height) forest.unite(representative[m.left], representative[m.right]);
  }

  std::map<std::size_t, std::vector<std::string>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[forest.find(i)].push_back(dendrogram.symbols[i]);
  ClusterPartition out{height, {}};
  for (auto& [root, group] : by_root) {
    std::sort(group.begin(), group.end());
    out.groups.push_back(std::move(group));
  }
  std::sort(out.groups.begin(), out.groups.end());
  return out;
}

}  // namespace corrtree
