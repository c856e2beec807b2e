#pragma once

#include <span>
#include <utility>
#include <vector>

namespace hprop {

/// Simple undirected graph on nodes 0..n-1: sorted pair list plus ascending
/// neighbor lists. No self-loops, no multi-edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int node_count) : neighbors_(static_cast<std::size_t>(node_count)) {}

  /// Builds from an arbitrary edge list; duplicates are merged. Throws
  /// std::invalid_argument on self-loops or out-of-range endpoints.
  static Graph from_edges(int node_count, std::span<const std::pair<int, int>> edges);

  /// Adopts neighbor lists that are already sorted, symmetric and loop-free.
  static Graph from_sorted_neighbors(std::vector<std::vector<int>> neighbors);

  int node_count() const noexcept { return static_cast<int>(neighbors_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<int>& neighbors(int v) const { return neighbors_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<int>>& adjacency() const noexcept { return neighbors_; }

  bool has_edge(int u, int v) const;

  /// Sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  bool is_bipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> neighbors_;
  std::size_t edge_count_ = 0;
};

/// Subgraph induced by `nodes` (ascending ids). Node k of the result is nodes[k].
Graph induced_subgraph(const Graph& g, std::span<const int> nodes);

}  // namespace hprop
