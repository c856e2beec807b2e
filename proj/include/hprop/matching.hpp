#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hprop {

/// Maximum-cardinality bipartite matching, O(E sqrt(V)).
///
/// Left node u may be matched to any right node in adjacency[u]. Lists are
/// scanned in the order given, which fixes tie-breaking.
class HopcroftKarp {
 public:
  HopcroftKarp(std::span<const std::vector<int>> adjacency, int right_count);

  /// Computes a maximum matching and returns its size. Idempotent.
  int run();

  int size() const noexcept { return size_; }
  /// Right partner of each left node, or -1.
  const std::vector<int>& left_partner() const noexcept { return match_left_; }
  /// Left partner of each right node, or -1.
  const std::vector<int>& right_partner() const noexcept { return match_right_; }

  /// After run(): if some left node is unmatched, the left nodes reachable
  /// from the first such node by alternating paths (sorted). Their joint
  /// neighborhood is one smaller than the set itself. Empty otherwise.
  std::vector<int> hall_violator() const;

 private:
  bool layer();
  bool augment(int root);

  std::span<const std::vector<int>> adj_;
  int right_count_;
  int size_ = 0;
  bool done_ = false;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
  std::vector<std::size_t> cursor_;
  std::vector<int> stack_;
};

/// Set of (left, right) pairs; no node appears twice.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
};

/// Either a matching covering every left node, or a Hall-violating left subset.
struct LeftPerfectResult {
  std::optional<Matching> matching;
  std::vector<int> hall_witness;
};

/// Left-perfect matching on the bipartite graph (left, right, edges), with
/// edges given as (left id, right id). Throws Error(LeftLargerThanRight) when
/// |left| > |right|, and std::invalid_argument for an edge whose endpoints
/// are not on the declared sides.
LeftPerfectResult left_perfect_matching(std::span<const int> left, std::span<const int> right,
                                        std::span<const std::pair<int, int>> edges);

}  // namespace hprop
