#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hprop/rational.hpp"

namespace hprop {

using RationalRows = std::vector<std::vector<Rational>>;

/// Piecewise-constant graphon on a q x q grid of rectangles.
///
/// Only obtainable through validate_graphon, so every instance satisfies:
/// partition 0 = s_0 < s_1 < ... < s_q = 1, values symmetric, entries in [0, 1].
class StepGraphon {
 public:
  int blocks() const noexcept { return static_cast<int>(values_.rows()); }
  const std::vector<Rational>& partition() const noexcept { return partition_; }
  const MatrixQ& values() const noexcept { return values_; }
  const Rational& value(int i, int j) const { return values_(i, j); }

  friend bool operator==(const StepGraphon& a, const StepGraphon& b) {
    return a.partition_ == b.partition_ && a.values_ == b.values_;
  }

 private:
  StepGraphon(std::vector<Rational> partition, MatrixQ values)
      : partition_(std::move(partition)), values_(std::move(values)) {}

  friend StepGraphon validate_graphon(std::vector<Rational> partition, MatrixQ values);

  std::vector<Rational> partition_;
  MatrixQ values_;
};

/// Checks the raw inputs and returns a graphon, or throws Error naming the
/// violated invariant. Never repairs its input.
StepGraphon validate_graphon(std::vector<Rational> partition, MatrixQ values);
StepGraphon validate_graphon(std::vector<Rational> partition,
                             const RationalRows& values);

/// Interval lengths s_i - s_{i-1}; strictly positive and summing to exactly 1.
using ConcentrationVector = VectorQ;

ConcentrationVector concentration_vector(const StepGraphon& g);

/// Support graph of a step-graphon on nodes 0..q-1.
struct SkeletonGraph {
  int node_count = 0;
  std::vector<int> self_loops;              // sorted
  std::vector<std::pair<int, int>> edges;   // first < second, sorted

  bool has_self_loop(int node) const;
  bool has_edge(int a, int b) const;
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const SkeletonGraph&, const SkeletonGraph&) = default;
};

SkeletonGraph skeleton_graph(const StepGraphon& g);

/// Connectivity through distinct-node edges. A single node is connected.
bool is_connected(const SkeletonGraph& s);

/// Throws Error(DisconnectedSkeleton) unless is_connected(s).
void require_connected(const SkeletonGraph& s);

/// One skeleton edge; a == b denotes a self-loop.
struct SkeletonEdge {
  int a = 0;
  int b = 0;
  bool is_loop() const noexcept { return a == b; }
  friend bool operator==(const SkeletonEdge&, const SkeletonEdge&) = default;
};

/// q x |F| matrix whose columns are probability vectors: 1/2 at both ends of
/// an edge, 1 at the node of a self-loop. Columns list distinct-node edges in
/// lexicographic order followed by self-loops in node order.
struct IncidenceMatrix {
  MatrixQ z;
  std::vector<SkeletonEdge> column_edge;

  int rows() const noexcept { return static_cast<int>(z.rows()); }
  int columns() const noexcept { return static_cast<int>(z.cols()); }
};

IncidenceMatrix incidence_matrix(const SkeletonGraph& s);

/// True iff the distinct-node edges form one simple path through all nodes and
/// there is exactly one self-loop, sitting at an end of that path. For q = 1
/// the single node must carry a self-loop.
bool is_line_graphon(const SkeletonGraph& s);

/// Nodes along the path, ending at the self-loop node; nullopt when not a line.
std::optional<std::vector<int>> line_order(const SkeletonGraph& s);

}  // namespace hprop
