#include "hprop/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hprop/error.hpp"

namespace hprop {

namespace {
constexpr int kUnreached = std::numeric_limits<int>::max();
}

HopcroftKarp::HopcroftKarp(std::span<const std::vector<int>> adjacency, int right_count)
    : adj_(adjacency),
      right_count_(right_count),
      match_left_(adjacency.size(), -1),
      match_right_(static_cast<std::size_t>(right_count), -1),
      dist_(adjacency.size(), kUnreached),
      cursor_(adjacency.size(), 0) {}

int HopcroftKarp::run() {
  if (done_) return size_;
  const int left_count = static_cast<int>(adj_.size());

  // Greedy start: first free neighbor in list order.
  for (int u = 0; u < left_count; ++u) {
    for (int v : adj_[u]) {
      if (match_right_[v] == -1) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++size_;
        break;
      }
    }
  }

  while (size_ < left_count && layer()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    for (int u = 0; u < left_count; ++u) {
      if (match_left_[u] == -1 && augment(u)) ++size_;
    }
  }
  done_ = true;
  return size_;
}

// BFS from all free left nodes over alternating paths; true iff some free
// right node is reachable.
bool HopcroftKarp::layer() {
  std::queue<int> frontier;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (match_left_[u] == -1) {
      dist_[u] = 0;
      frontier.push(static_cast<int>(u));
    } else {
      dist_[u] = kUnreached;
    }
  }
  bool found = false;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : adj_[u]) {
      int w = match_right_[v];
      if (w == -1) {
        found = true;
      } else if (dist_[w] == kUnreached) {
        dist_[w] = dist_[u] + 1;
        frontier.push(w);
      }
    }
  }
  return found;
}

// Iterative layered DFS from a free left node.
bool HopcroftKarp::augment(int root) {
  stack_.clear();
  stack_.push_back(root);
  while (!stack_.empty()) {
    const int u = stack_.back();
    const auto& nbrs = adj_[u];
    if (cursor_[u] == nbrs.size()) {
      dist_[u] = kUnreached;
      stack_.pop_back();
      continue;
    }
    const int v = nbrs[cursor_[u]];
    const int w = match_right_[v];
    if (w == -1) {
      for (int x : stack_) {
        const int y = adj_[x][cursor_[x]];
        match_left_[x] = y;
        match_right_[y] = x;
      }
      return true;
    }
    if (dist_[w] != kUnreached && dist_[w] == dist_[u] + 1) {
      stack_.push_back(w);
    } else {
      ++cursor_[u];
    }
  }
  return false;
}

std::vector<int> HopcroftKarp::hall_violator() const {
  const int left_count = static_cast<int>(adj_.size());
  int start = -1;
  for (int u = 0; u < left_count; ++u) {
    if (match_left_[u] == -1) {
      start = u;
      break;
    }
  }
  if (start < 0) return {};
  std::vector<char> seen_left(adj_.size(), 0);
  std::vector<char> seen_right(static_cast<std::size_t>(right_count_), 0);
  std::vector<int> reached{start};
  seen_left[start] = 1;
  for (std::size_t k = 0; k < reached.size(); ++k) {
    for (int v : adj_[reached[k]]) {
      if (seen_right[v]) continue;
      seen_right[v] = 1;
      const int w = match_right_[v];
      if (w >= 0 && !seen_left[w]) {
        seen_left[w] = 1;
        reached.push_back(w);
      }
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

LeftPerfectResult left_perfect_matching(std::span<const int> left, std::span<const int> right,
                                        std::span<const std::pair<int, int>> edges) {
  if (left.size() > right.size()) {
    throw Error(ErrorKind::LeftLargerThanRight, std::to_string(left.size()) + " left nodes but only " +
                                                    std::to_string(right.size()) + " right nodes");
  }
  std::unordered_map<int, int> left_index;
  std::unordered_map<int, int> right_index;
  for (std::size_t i = 0; i < left.size(); ++i) left_index.emplace(left[i], static_cast<int>(i));
  for (std::size_t i = 0; i < right.size(); ++i) right_index.emplace(right[i], static_cast<int>(i));

  std::vector<std::vector<int>> adj(left.size());
  for (auto [l, r] : edges) {
    auto li = left_index.find(l);
    auto ri = right_index.find(r);
    if (li == left_index.end() || ri == right_index.end()) {
      throw std::invalid_argument("edge (" + std::to_string(l) + ", " + std::to_string(r) +
                                  ") does not join a left node to a right node");
    }
    adj[li->second].push_back(ri->second);
  }
  // Ascending right ids for deterministic tie-breaking.
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [&](int a, int b) { return right[a] < right[b]; });
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  HopcroftKarp hk(adj, static_cast<int>(right.size()));
  hk.run();
  LeftPerfectResult result;
  if (hk.size() == static_cast<int>(left.size())) {
    Matching m;
    m.pairs.reserve(left.size());
    for (std::size_t i = 0; i < left.size(); ++i) m.pairs.emplace_back(left[i], right[hk.left_partner()[i]]);
    result.matching = std::move(m);
  } else {
    for (int local : hk.hall_violator()) result.hall_witness.push_back(left[local]);
    std::sort(result.hall_witness.begin(), result.hall_witness.end());
  }
  return result;
}

}  // namespace hprop
