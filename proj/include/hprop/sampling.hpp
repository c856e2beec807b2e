#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hprop/graph.hpp"
#include "hprop/graphon.hpp"

namespace hprop {

/// One draw G_n ~ W. `group[v]` is the 0-based block containing the
/// coordinate of v. Graphs read back from a dump carry no coordinates.
struct SampledGraph {
  int blocks = 0;
  std::vector<double> coordinates;
  std::vector<int> group;
  Graph graph;

  int node_count() const noexcept { return graph.node_count(); }
};

/// Node tally per block; counts sum to the node count.
struct GroupCounts {
  std::vector<int> counts;

  int total() const noexcept;
  int operator[](std::size_t i) const { return counts[i]; }
  std::size_t size() const noexcept { return counts.size(); }
  friend bool operator==(const GroupCounts&, const GroupCounts&) = default;
};

/// Coordinates use draws 0..n-1 of CounterRng(seed); pair {i, j}, i < j, uses
/// draw n + rank(i, j) in row-major upper-triangle order. An edge is placed
/// iff the 53-bit draw is below floor(W * 2^53), so W = 1 always connects and
/// W = 0 never does. Fully determined by (g, n, seed).
SampledGraph sample_graph(const StepGraphon& g, int n, std::uint64_t seed);

GroupCounts group_counts(const SampledGraph& sg);

/// Exact n_i / n. Requires at least one node.
VectorQ empirical_concentration(const SampledGraph& sg);
VectorQ empirical_concentration(const GroupCounts& counts);

/// Edge-list dump: header "n q", a line of 1-based group labels, then one
/// "u v" line per edge (0-based node ids, u < v, ascending).
void write_graph_dump(std::ostream& out, const SampledGraph& sg);
SampledGraph read_graph_dump(std::istream& in);

}  // namespace hprop
