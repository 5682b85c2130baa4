#include "corrtree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace corrtree {

LinkKey make_link_key(std::string x, std::string y) {
  if (y < x) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

bool SpanningTree::contains(const LinkKey& link) const {
  return std::any_of(edges.begin(), edges.end(),
                     [&](const TreeEdge& e) { return e.a == link.first && e.b == link.second; });
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> canonical_pair_order(const Symbols& symbols) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = symbols.size();
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  auto key = [&](const std::pair<std::size_t, std::size_t>& p) {
    const auto& x = symbols[p.first];
    const auto& y = symbols[p.second];
    return x < y ? std::pair<const std::string&, const std::string&>(x, y)
                 : std::pair<const std::string&, const std::string&>(y, x);
  };
  std::sort(pairs.begin(), pairs.end(), [&](const auto& l, const auto& r) { return key(l) < key(r); });
  return pairs;
}

std::vector<std::pair<std::size_t, std::size_t>> kruskal_pairs(
    const SquareMatrix& dist, const std::vector<std::pair<std::size_t, std::size_t>>& tie_order) {
  const std::size_t n = dist.size();
  // Indices into tie_order; stable sort by weight keeps tie_order for equal weights.
  std::vector<std::size_t> order(tie_order.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return dist(tie_order[l].first, tie_order[l].second) < dist(tie_order[r].first, tie_order[r].second);
  });

  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  chosen.reserve(n - 1);
  UnionFind forest(n);
  for (std::size_t k : order) {
    const auto [i, j] = tie_order[k];
    if (forest.unite(i, j)) {
      chosen.emplace_back(i, j);
      if (chosen.size() + 1 == n) break;
    }
  }
  return chosen;
}

SpanningTree kruskal_mst(const DistanceMatrix& dist) {
  const auto& symbols = dist.symbols;
  SpanningTree tree{symbols, {}};
  for (const auto& [i, j] : kruskal_pairs(dist.values, canonical_pair_order(symbols))) {
    auto [a, b] = make_link_key(symbols[i], symbols[j]);
    tree.edges.push_back(TreeEdge{std::move(a), std::move(b), dist.values(i, j), std::nullopt});
  }
  // Kruskal emits edges in (weight, a, b) order already.
  return tree;
}

UltrametricMatrix subdominant_ultrametric(const SpanningTree& tree) {
  const std::size_t n = tree.symbols.size();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(tree.symbols[i], i);

  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency(n);
  for (const auto& e : tree.edges) {
    const std::size_t a = index.at(e.a);
    const std::size_t b = index.at(e.b);
    adjacency[a].emplace_back(b, e.weight);
    adjacency[b].emplace_back(a, e.weight);
  }

  UltrametricMatrix out{tree.symbols, SquareMatrix(n)};
  std::vector<std::size_t> stack;
  std::vector<bool> visited(n);
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(visited.begin(), visited.end(), false);
    visited[source] = true;
    stack.assign(1, source);
    while (!stack.empty()) {
      const std::size_t node = stack.back();
      stack.pop_back();
      for (const auto& [next, w] : adjacency[node]) {
        if (visited[next]) continue;
        visited[next] = true;
        out.values(source, next) = std::max(out.values(source, node), w);
        stack.push_back(next);
      }
    }
  }
  return out;
}

double tree_length(const SpanningTree& tree) {
  double total = 0.0;
  for (const auto& e : tree.edges) total += e.weight;
  return total;
}

}  // namespace corrtree
