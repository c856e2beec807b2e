#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hprop/graph.hpp"
#include "hprop/graphon.hpp"
#include "hprop/sampling.hpp"

namespace hprop {

/// Node-disjoint directed cycles covering every node. Cycle c visits
/// c[0] -> c[1] -> ... -> c.back() -> c[0]; a 2-cycle uses one undirected
/// edge in both directions.
struct HamiltonianDecomposition {
  std::vector<std::vector<int>> cycles;

  /// Rotates each cycle to start at its smallest node and sorts cycles by it.
  void normalize();

  friend bool operator==(const HamiltonianDecomposition&, const HamiltonianDecomposition&) = default;
};

struct DecisionResult {
  bool decision = false;
  std::optional<HamiltonianDecomposition> decomposition;
};

/// Exact decision: the directed version of g has a spanning union of disjoint
/// directed cycles iff the left/right double cover has a perfect matching.
/// The decomposition is the orbit structure of the matching permutation.
DecisionResult has_hamiltonian_decomposition(const Graph& g);
inline DecisionResult has_hamiltonian_decomposition(const SampledGraph& sg) {
  return has_hamiltonian_decomposition(sg.graph);
}

/// Exhaustive search over fixed-point-free permutations i -> mu(i) along
/// edges. Throws Error(TooLarge) for more than 9 nodes.
bool brute_force_hd(const Graph& g);

/// Lexicographically smallest triangle (a < b < c), if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

/// Cover of a dense random graph: for an even node count, split by index
/// parity (even indices left) and take a perfect matching as 2-cycles; for an
/// odd count, first remove the smallest triangle and treat the rest alike.
/// nullopt when a step fails. Result uses the graph's own node ids.
std::optional<HamiltonianDecomposition> er_hamiltonian_decomposition(const Graph& g);

/// Same, on the subgraph induced by `nodes` (ascending); result in g's ids.
std::optional<HamiltonianDecomposition> er_hamiltonian_decomposition(const Graph& g, std::span<const int> nodes);

enum class ConstructiveOutcome { Success, CountsFailed, MatchingFailed, ResidualFailed, NotRun };

struct LineDecompositionResult {
  ConstructiveOutcome outcome = ConstructiveOutcome::NotRun;
  /// For MatchingFailed: the stage k (1-based) whose left-perfect matching
  /// from the leftover of block k into block k+1 did not exist.
  int stage = 0;
  /// Leftover block sizes n'_k along the path (the alternating count sums).
  std::vector<long long> leftover_counts;
  std::optional<HamiltonianDecomposition> decomposition;

  bool success() const noexcept { return outcome == ConstructiveOutcome::Success; }
  /// "success", "counts_failed", "matching_failed_at_stage_k", "residual_failed" or "not_run".
  std::string tag() const;
};

/// Staged construction for line graphons. `order` lists block ids along the
/// path, ending at the self-loop block. Checks that every alternating count
/// sum is positive, then matches the leftover of each block into the next
/// (only edges between the two blocks are used) and covers what is left of
/// the last block with er_hamiltonian_decomposition. Best effort: failure does
/// not imply that no decomposition exists.
/// Throws Error(NotALineGraphon) if `order` is not a permutation of the blocks.
LineDecompositionResult construct_line_decomposition(const SampledGraph& sg, std::span<const int> order);

/// Derives the path order from the skeleton; throws Error(NotALineGraphon).
LineDecompositionResult construct_line_decomposition(const SampledGraph& sg, const SkeletonGraph& skeleton);

/// True iff the cycles are node-disjoint, cover all nodes, have length >= 2
/// and every arc is an edge of g.
bool verify_decomposition(const Graph& g, const HamiltonianDecomposition& hd);
inline bool verify_decomposition(const SampledGraph& sg, const HamiltonianDecomposition& hd) {
  return verify_decomposition(sg.graph, hd);
}

}  // namespace hprop
