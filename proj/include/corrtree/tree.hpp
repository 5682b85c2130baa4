#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corrtree/common.hpp"
#include "corrtree/metric.hpp"

namespace corrtree {

/// An MST link. Endpoints are canonical: a < b lexicographically.
struct TreeEdge {
  std::string a;
  std::string b;
  double weight = 0.0;
  std::optional<double> reliability;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// Unordered symbol pair identifying a link regardless of weight.
using LinkKey = std::pair<std::string, std::string>;

LinkKey make_link_key(std::string x, std::string y);

/// N - 1 edges sorted by (weight, a, b).
struct SpanningTree {
  Symbols symbols;
  std::vector<TreeEdge> edges;

  bool contains(const LinkKey& link) const;
  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

struct UltrametricMatrix {
  Symbols symbols;
  SquareMatrix values;
};

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  /// False if x and y were already connected.
  bool unite(std::size_t x, std::size_t y);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Kruskal over the complete graph. Candidates are ordered by
/// (weight, canonical symbol pair), so ties resolve the same way whatever the
/// input column order.
SpanningTree kruskal_mst(const DistanceMatrix& dist);

/// Index-based Kruskal kernel shared by kruskal_mst and the bootstrap.
/// `pair_rank` orders candidate pairs (i < j) for tie-breaking; returns the
/// chosen pairs as (i, j) indices.
std::vector<std::pair<std::size_t, std::size_t>> kruskal_pairs(
    const SquareMatrix& dist, const std::vector<std::pair<std::size_t, std::size_t>>& tie_order);

/// All pairs (i < j) ordered by their canonical symbol pair.
std::vector<std::pair<std::size_t, std::size_t>> canonical_pair_order(const Symbols& symbols);

/// Maximum edge weight on the tree path between every pair of entities.
UltrametricMatrix subdominant_ultrametric(const SpanningTree& tree);

double tree_length(const SpanningTree& tree);

}  // namespace corrtree
