#include "hprop/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace hprop {

Graph Graph::from_edges(int node_count, std::span<const std::pair<int, int>> edges) {
  Graph g(node_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for " + std::to_string(node_count) + " nodes");
    }
    if (u == v) throw std::invalid_argument("self-loop at node " + std::to_string(u));
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& list : g.neighbors_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    degree_sum += list.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

Graph Graph::from_sorted_neighbors(std::vector<std::vector<int>> neighbors) {
  Graph g;
  std::size_t degree_sum = 0;
  for (const auto& list : neighbors) degree_sum += list.size();
  g.neighbors_ = std::move(neighbors);
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= node_count() || v >= node_count()) return false;
  const auto& a = neighbors(u);
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < node_count(); ++u) {
    for (int v : neighbors(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(neighbors_.size(), -1);
  std::queue<int> frontier;
  for (int s = 0; s < node_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const int> nodes) {
  std::vector<int> local(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<int>(k);
  std::vector<std::vector<int>> adj(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (int v : g.neighbors(nodes[k])) {
      if (int lv = local[v]; lv >= 0) adj[k].push_back(lv);
    }
    std::sort(adj[k].begin(), adj[k].end());
  }
  return Graph::from_sorted_neighbors(std::move(adj));
}

}  // namespace hprop
