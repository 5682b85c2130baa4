#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "corrtree/common.hpp"
#include "corrtree/metric.hpp"

namespace corrtree {

enum class LinkageMethod { single, average };

std::string_view to_string(LinkageMethod method);
/// Throws std::invalid_argument on unknown names.
LinkageMethod parse_linkage_method(std::string_view name);

/// Cluster references: 0..N-1 are leaves (symbol indices), N + k is the
/// cluster formed by merge k.
struct Merge {
  std::size_t left = 0;
  std::size_t right = 0;
  double height = 0.0;

  friend bool operator==(const Merge&, const Merge&) = default;
};

struct Dendrogram {
  Symbols symbols;
  std::vector<Merge> merges;
  LinkageMethod method = LinkageMethod::single;

  friend bool operator==(const Dendrogram&, const Dendrogram&) = default;
};

struct ClusterPartition {
  double height = 0.0;
  /// Each group sorted; groups ordered by their sorted member lists.
  std::vector<std::vector<std::string>> groups;

  friend bool operator==(const ClusterPartition&, const ClusterPartition&) = default;
};

/// Inter-cluster distance is the minimum pairwise distance.
Dendrogram single_linkage(const DistanceMatrix& dist);

/// Inter-cluster distance is the unweighted mean over all cross pairs (UPGMA).
Dendrogram average_linkage(const DistanceMatrix& dist);

Dendrogram build_dendrogram(const DistanceMatrix& dist, LinkageMethod method);

/// Height at which each pair of leaves first joins.
SquareMatrix cophenetic_matrix(const Dendrogram& dendrogram);

/// Connected components after dropping merges above `height`.
ClusterPartition cut(const Dendrogram& dendrogram, double height);

}  // namespace corrtree
