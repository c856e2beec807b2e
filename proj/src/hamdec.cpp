#include "hprop/hamdec.hpp"

#include <algorithm>
#include <string>

#include "hprop/error.hpp"
#include "hprop/matching.hpp"

namespace hprop {

void HamiltonianDecomposition::normalize() {
  for (auto& c : cycles) {
    auto smallest = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), smallest, c.end());
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

DecisionResult has_hamiltonian_decomposition(const Graph& g) {
  const int n = g.node_count();
  DecisionResult out;
  HopcroftKarp hk(g.adjacency(), n);
  if (hk.run() != n) return out;

  // mu(i) = partner of i; cycles are its orbits, visited from the smallest node.
  const auto& mu = hk.left_partner();
  HamiltonianDecomposition hd;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int v = start; !seen[v]; v = mu[v]) {
      seen[v] = 1;
      cycle.push_back(v);
    }
    hd.cycles.push_back(std::move(cycle));
  }
  out.decision = true;
  out.decomposition = std::move(hd);
  return out;
}

namespace {

bool assign_successor(const Graph& g, int i, std::vector<char>& used) {
  if (i == g.node_count()) return true;
  for (int j : g.neighbors(i)) {
    if (used[j]) continue;
    used[j] = 1;
    if (assign_successor(g, i + 1, used)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

bool brute_force_hd(const Graph& g) {
  if (g.node_count() > 9) {
    throw Error(ErrorKind::TooLarge, "brute force limited to 9 nodes, got " + std::to_string(g.node_count()));
  }
  // mu(i) ranges over neighbors, so it is automatically fixed-point free.
  std::vector<char> used(static_cast<std::size_t>(g.node_count()), 0);
  return assign_successor(g, 0, used);
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (int a = 0; a < g.node_count(); ++a) {
    const auto& na = g.neighbors(a);
    for (int b : na) {
      if (b <= a) continue;
      // Smallest c > b adjacent to both: merge the two ascending lists.
      const auto& nb = g.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          return std::array<int, 3>{a, b, *ia};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

// Perfect matching between even and odd positions of `nodes`, as 2-cycles.
bool parity_matching(const Graph& g, std::span<const int> nodes, std::vector<std::vector<int>>& cycles) {
  if (nodes.size() % 2 != 0) return false;
  std::vector<int> position(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) position[nodes[k]] = static_cast<int>(k);

  const std::size_t half = nodes.size() / 2;
  std::vector<std::vector<int>> adj(half);
  for (std::size_t l = 0; l < half; ++l) {
    for (int v : g.neighbors(nodes[2 * l])) {
      const int p = position[v];
      if (p >= 0 && p % 2 == 1) adj[l].push_back(p / 2);
    }
  }
  HopcroftKarp hk(adj, static_cast<int>(half));
  if (hk.run() != static_cast<int>(half)) return false;
  for (std::size_t l = 0; l < half; ++l) {
    cycles.push_back({nodes[2 * l], nodes[2 * static_cast<std::size_t>(hk.left_partner()[l]) + 1]});
  }
  return true;
}

}  // namespace

std::optional<HamiltonianDecomposition> er_hamiltonian_decomposition(const Graph& g, std::span<const int> nodes) {
  HamiltonianDecomposition hd;
  std::vector<int> rest(nodes.begin(), nodes.end());
  if (rest.size() % 2 == 1) {
    const Graph sub = induced_subgraph(g, nodes);
    auto tri = find_triangle(sub);
    if (!tri) return std::nullopt;
    std::vector<int> cycle{nodes[(*tri)[0]], nodes[(*tri)[1]], nodes[(*tri)[2]]};
    std::erase_if(rest, [&](int v) { return std::find(cycle.begin(), cycle.end(), v) != cycle.end(); });
    hd.cycles.push_back(std::move(cycle));
  }
  if (!parity_matching(g, rest, hd.cycles)) return std::nullopt;
  hd.normalize();
  return hd;
}

std::optional<HamiltonianDecomposition> er_hamiltonian_decomposition(const Graph& g) {
  std::vector<int> all(static_cast<std::size_t>(g.node_count()));
  for (int v = 0; v < g.node_count(); ++v) all[v] = v;
  return er_hamiltonian_decomposition(g, all);
}

std::string LineDecompositionResult::tag() const {
  switch (outcome) {
    case ConstructiveOutcome::Success: return "success";
    case ConstructiveOutcome::CountsFailed: return "counts_failed";
    case ConstructiveOutcome::MatchingFailed: return "matching_failed_at_stage_" + std::to_string(stage);
    case ConstructiveOutcome::ResidualFailed: return "residual_failed";
    case ConstructiveOutcome::NotRun: return "not_run";
  }
  return "unknown";
}

LineDecompositionResult construct_line_decomposition(const SampledGraph& sg, std::span<const int> order) {
  const int q = sg.blocks;
  {
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    bool permutation = static_cast<int>(sorted.size()) == q && q > 0;
    for (int k = 0; permutation && k < q; ++k) permutation = sorted[k] == k;
    if (!permutation) {
      throw Error(ErrorKind::NotALineGraphon, "path order is not a permutation of the " + std::to_string(q) + " blocks");
    }
  }

  std::vector<int> step_of(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) step_of[order[k]] = k;
  std::vector<std::vector<int>> members(static_cast<std::size_t>(q));
  for (int v = 0; v < sg.node_count(); ++v) members[step_of[sg.group[v]]].push_back(v);

  LineDecompositionResult result;
  long long running = 0;
  for (int k = 0; k < q; ++k) {
    running = static_cast<long long>(members[k].size()) - running;
    result.leftover_counts.push_back(running);
  }
  for (long long s : result.leftover_counts) {
    if (s <= 0) {
      result.outcome = ConstructiveOutcome::CountsFailed;
      return result;
    }
  }

  const Graph& g = sg.graph;
  std::vector<int> position(static_cast<std::size_t>(sg.node_count()), -1);
  HamiltonianDecomposition hd;
  std::vector<int> leftover = members[0];
  for (int k = 0; k + 1 < q; ++k) {
    const auto& right = members[k + 1];
    for (std::size_t r = 0; r < right.size(); ++r) position[right[r]] = static_cast<int>(r);
    std::vector<std::vector<int>> adj(leftover.size());
    for (std::size_t l = 0; l < leftover.size(); ++l) {
      for (int v : g.neighbors(leftover[l])) {
        if (step_of[sg.group[v]] == k + 1) adj[l].push_back(position[v]);
      }
    }
    HopcroftKarp hk(adj, static_cast<int>(right.size()));
    if (hk.run() != static_cast<int>(leftover.size())) {
      result.outcome = ConstructiveOutcome::MatchingFailed;
      result.stage = k + 1;
      return result;
    }
    for (std::size_t l = 0; l < leftover.size(); ++l) {
      hd.cycles.push_back({leftover[l], right[hk.left_partner()[l]]});
    }
    std::vector<int> next;
    next.reserve(right.size() - leftover.size());
    for (std::size_t r = 0; r < right.size(); ++r) {
      if (hk.right_partner()[r] == -1) next.push_back(right[r]);
    }
    leftover = std::move(next);
  }

  auto residual = er_hamiltonian_decomposition(g, leftover);
  if (!residual) {
    result.outcome = ConstructiveOutcome::ResidualFailed;
    return result;
  }
  for (auto& c : residual->cycles) hd.cycles.push_back(std::move(c));
  hd.normalize();
  result.outcome = ConstructiveOutcome::Success;
  result.decomposition = std::move(hd);
  return result;
}

LineDecompositionResult construct_line_decomposition(const SampledGraph& sg, const SkeletonGraph& skeleton) {
  if (skeleton.node_count != sg.blocks) {
    throw Error(ErrorKind::DimensionMismatch, "skeleton has " + std::to_string(skeleton.node_count) +
                                                  " nodes but the graph has " + std::to_string(sg.blocks) + " groups");
  }
  auto order = line_order(skeleton);
  if (!order) throw Error(ErrorKind::NotALineGraphon, "skeleton is not a path with one self-loop at an end");
  return construct_line_decomposition(sg, *order);
}

bool verify_decomposition(const Graph& g, const HamiltonianDecomposition& hd) {
  const int n = g.node_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& c : hd.cycles) {
    if (c.size() < 2) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int v = c[i];
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      ++covered;
      if (!g.has_edge(v, c[(i + 1) % c.size()])) return false;
    }
  }
  return covered == n;
}

}  // namespace hprop
