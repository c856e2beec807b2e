#include "hprop/graphon.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hprop/error.hpp"

namespace hprop {

StepGraphon validate_graphon(std::vector<Rational> partition, MatrixQ values) {
  if (partition.size() < 2) {
    throw Error(ErrorKind::EndpointViolation, "partition needs at least the points 0 and 1");
  }
  const auto q = static_cast<Eigen::Index>(partition.size() - 1);
  if (values.rows() != q || values.cols() != q) {
    throw Error(ErrorKind::DimensionMismatch,
                "values must be " + std::to_string(q) + "x" + std::to_string(q) + " for a partition of " +
                    std::to_string(partition.size()) + " points");
  }
  if (partition.front() != 0 || partition.back() != 1) {
    throw Error(ErrorKind::EndpointViolation, "partition must start at 0 and end at 1, got " +
                                                  to_string(partition.front()) + " .. " +
                                                  to_string(partition.back()));
  }
  for (std::size_t i = 1; i < partition.size(); ++i) {
    if (!(partition[i - 1] < partition[i])) {
      throw Error(ErrorKind::NonMonotonePartition,
                  "partition point " + std::to_string(i) + " (" + to_string(partition[i]) +
                      ") does not exceed its predecessor (" + to_string(partition[i - 1]) + ")");
    }
  }
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = 0; j < q; ++j) {
      const Rational& v = values(i, j);
      if (v < 0 || v > 1) {
        throw Error(ErrorKind::ValueOutOfRange, "value[" + std::to_string(i) + "][" + std::to_string(j) +
                                                    "] = " + to_string(v) + " is outside [0, 1]");
      }
    }
  }
  for (Eigen::Index i = 0; i < q; ++i) {
    for (Eigen::Index j = i + 1; j < q; ++j) {
      if (values(i, j) != values(j, i)) {
        throw Error(ErrorKind::AsymmetricValues, "value[" + std::to_string(i) + "][" + std::to_string(j) +
                                                     "] != value[" + std::to_string(j) + "][" +
                                                     std::to_string(i) + "]");
      }
    }
  }
  return StepGraphon(std::move(partition), std::move(values));
}

StepGraphon validate_graphon(std::vector<Rational> partition,
                             const RationalRows& values) {
  const auto rows = static_cast<Eigen::Index>(values.size());
  Eigen::Index cols = rows;
  for (const auto& row : values) {
    if (static_cast<Eigen::Index>(row.size()) != rows) {
      throw Error(ErrorKind::DimensionMismatch, "values must be a square matrix");
    }
  }
  MatrixQ m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = values[i][j];
  }
  return validate_graphon(std::move(partition), std::move(m));
}

ConcentrationVector concentration_vector(const StepGraphon& g) {
  const auto& sigma = g.partition();
  ConcentrationVector x(g.blocks());
  for (int i = 0; i < g.blocks(); ++i) x(i) = sigma[i + 1] - sigma[i];
  return x;
}

bool SkeletonGraph::has_self_loop(int node) const {
  return std::binary_search(self_loops.begin(), self_loops.end(), node);
}

bool SkeletonGraph::has_edge(int a, int b) const {
  if (a == b) return has_self_loop(a);
  return std::binary_search(edges.begin(), edges.end(), std::pair<int, int>(std::min(a, b), std::max(a, b)));
}

std::vector<std::vector<int>> SkeletonGraph::adjacency() const {
  std::vector<std::vector<int>> adj(node_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

SkeletonGraph skeleton_graph(const StepGraphon& g) {
  SkeletonGraph s;
  s.node_count = g.blocks();
  for (int i = 0; i < s.node_count; ++i) {
    if (g.value(i, i) != 0) s.self_loops.push_back(i);
    for (int j = i + 1; j < s.node_count; ++j) {
      if (g.value(i, j) != 0) s.edges.emplace_back(i, j);
    }
  }
  return s;
}

bool is_connected(const SkeletonGraph& s) {
  if (s.node_count <= 1) return true;
  const auto adj = s.adjacency();
  std::vector<char> seen(s.node_count, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == s.node_count;
}

void require_connected(const SkeletonGraph& s) {
  if (!is_connected(s)) {
    throw Error(ErrorKind::DisconnectedSkeleton,
                "skeleton graph on " + std::to_string(s.node_count) + " nodes is not connected");
  }
}

IncidenceMatrix incidence_matrix(const SkeletonGraph& s) {
  IncidenceMatrix inc;
  const auto columns = static_cast<Eigen::Index>(s.edges.size() + s.self_loops.size());
  inc.z = MatrixQ::Zero(s.node_count, columns);
  inc.column_edge.reserve(static_cast<std::size_t>(columns));
  const Rational half(1, 2);
  Eigen::Index col = 0;
  for (auto [a, b] : s.edges) {
    inc.z(a, col) = half;
    inc.z(b, col) = half;
    inc.column_edge.push_back({a, b});
    ++col;
  }
  for (int node : s.self_loops) {
    inc.z(node, col) = 1;
    inc.column_edge.push_back({node, node});
    ++col;
  }
  return inc;
}

std::optional<std::vector<int>> line_order(const SkeletonGraph& s) {
  if (s.self_loops.size() != 1) return std::nullopt;
  const int q = s.node_count;
  const int loop = s.self_loops.front();
  if (q == 1) return std::vector<int>{loop};
  if (static_cast<int>(s.edges.size()) != q - 1) return std::nullopt;

  const auto adj = s.adjacency();
  if (adj[loop].size() != 1) return std::nullopt;
  // Walk from the loop node; a tree with q-1 edges and max degree 2 reached in
  // q steps is a Hamiltonian path.
  std::vector<int> order{loop};
  int prev = -1;
  int cur = loop;
  while (true) {
    int next = -1;
    for (int v : adj[cur]) {
      if (v != prev) {
        if (next != -1) return std::nullopt;
        next = v;
      }
    }
    if (next == -1) break;
    if (static_cast<int>(order.size()) == q) return std::nullopt;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != q) return std::nullopt;
  std::reverse(order.begin(), order.end());
  return order;
}

bool is_line_graphon(const SkeletonGraph& s) { return line_order(s).has_value(); }

}  // namespace hprop
