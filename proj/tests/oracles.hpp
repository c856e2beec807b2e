#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hprop/rational.hpp"

namespace hprop::oracle {

/// Forward substitution on the line incidence pattern: x_1 = a_1 / 2,
/// x_k = (a_{k-1} + a_k) / 2, x_q = (a_{q-1} + 2 a_q) / 2.
inline std::vector<Rational> line_coefficients(const std::vector<Rational>& x) {
  const std::size_t q = x.size();
  std::vector<Rational> a(q);
  if (q == 1) {
    a[0] = x[0];
    return a;
  }
  a[0] = 2 * x[0];
  for (std::size_t k = 1; k + 1 < q; ++k) a[k] = 2 * x[k] - a[k - 1];
  a[q - 1] = (2 * x[q - 1] - a[q - 2]) / 2;
  return a;
}

/// s_k = sum_{l=0}^{k-1} (-1)^l x_{k-l}, written literally.
inline std::vector<Rational> alternating_sums(const std::vector<Rational>& x) {
  std::vector<Rational> s;
  for (std::size_t k = 1; k <= x.size(); ++k) {
    Rational total{0};
    for (std::size_t l = 0; l < k; ++l) total += (l % 2 == 0 ? 1 : -1) * x[k - l - 1];
    s.push_back(total);
  }
  return s;
}

/// Exact Gauss-Jordan solve of M y = r for a tall matrix with full column
/// rank; nullopt if the columns are dependent or the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_full_column_rank(std::vector<std::vector<Rational>> m,
                                                                   std::vector<Rational> r) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t piv = pr;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(m[piv], m[pr]);
    std::swap(r[piv], r[pr]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[pr][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[pr][j];
      r[i] -= f * r[pr];
    }
    ++pr;
  }
  for (std::size_t i = cols; i < rows; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  std::vector<Rational> y(cols);
  for (std::size_t c = 0; c < cols; ++c) y[c] = r[c] / m[c][c];
  return y;
}

/// Caratheodory enumeration: x lies in conv{columns} iff some affinely
/// independent subset represents it with nonnegative weights.
inline bool in_convex_hull(const std::vector<std::vector<Rational>>& columns, const std::vector<Rational>& x) {
  const std::size_t m = columns.size();
  const std::size_t q = x.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (1u << j)) pick.push_back(j);
    }
    if (pick.size() > q + 1) continue;
    std::vector<std::vector<Rational>> sys(q + 1, std::vector<Rational>(pick.size()));
    std::vector<Rational> rhs(q + 1);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t k = 0; k < pick.size(); ++k) sys[i][k] = columns[pick[k]][i];
      rhs[i] = x[i];
    }
    for (std::size_t k = 0; k < pick.size(); ++k) sys[q][k] = 1;
    rhs[q] = 1;
    auto w = solve_full_column_rank(sys, rhs);
    if (w && std::all_of(w->begin(), w->end(), [](const Rational& v) { return v >= 0; })) return true;
  }
  return false;
}

/// Maximum matching size by exhaustive search over left nodes.
inline int max_matching_size(const std::vector<std::vector<int>>& adj, int right_count) {
  std::vector<char> used(static_cast<std::size_t>(right_count), 0);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t u, int size) -> void {
    if (u == adj.size()) {
      best = std::max(best, size);
      return;
    }
    if (size + static_cast<int>(adj.size() - u) <= best) return;
    self(self, u + 1, size);
    for (int v : adj[u]) {
      if (used[v]) continue;
      used[v] = 1;
      self(self, u + 1, size + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

/// Cycle cover existence by std::next_permutation over all n! maps.
inline bool cycle_cover_by_permutations(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = adj[i][perm[i]] != 0;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace hprop::oracle
