#include "hprop/sampling.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "hprop/error.hpp"
#include "hprop/random.hpp"

namespace hprop {

int GroupCounts::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), 0); }

SampledGraph sample_graph(const StepGraphon& g, int n, std::uint64_t seed) {
  if (n < 0) throw Error(ErrorKind::MalformedInput, "node count must be non-negative");
  const int q = g.blocks();
  const CounterRng rng(seed);
  constexpr unsigned bits = CounterRng::kUniformBits;

  // Block i holds u with ceil(s_{i-1} 2^53) <= u < ceil(s_i 2^53).
  std::vector<std::uint64_t> cuts;
  cuts.reserve(static_cast<std::size_t>(q));
  for (int i = 1; i < q; ++i) cuts.push_back(ceil_scaled(g.partition()[i], bits));

  std::vector<std::uint64_t> threshold(static_cast<std::size_t>(q) * q);
  std::vector<char> row_has_edges(static_cast<std::size_t>(q), 0);
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) {
      threshold[i * q + j] = floor_scaled(g.value(i, j), bits);
      if (threshold[i * q + j] != 0) row_has_edges[i] = 1;
    }
  }

  SampledGraph sg;
  sg.blocks = q;
  sg.coordinates.resize(static_cast<std::size_t>(n));
  sg.group.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const std::uint64_t u = rng.uniform53(static_cast<std::uint64_t>(v));
    sg.coordinates[v] = CounterRng::to_unit(u);
    sg.group[v] = static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), u) - cuts.begin());
  }

  // Pass 1: upper neighbors of each row into one flat buffer. A draw is always
  // below 2^53, so threshold 2^53 (W = 1) always hits and 0 never does.
  std::vector<int> upper;
  std::vector<std::size_t> row_start(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> row_buffer(static_cast<std::size_t>(n));
  std::uint64_t draw = static_cast<std::uint64_t>(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t* row = threshold.data() + static_cast<std::size_t>(sg.group[i]) * q;
    int hits = 0;
    if (!row_has_edges[sg.group[i]]) {
      draw += static_cast<std::uint64_t>(n - i - 1);
    } else {
      for (int j = i + 1; j < n; ++j, ++draw) {
        row_buffer[hits] = j;
        hits += rng.uniform53(draw) < row[sg.group[j]] ? 1 : 0;
      }
    }
    upper.insert(upper.end(), row_buffer.begin(), row_buffer.begin() + hits);
    row_start[i + 1] = upper.size();
    degree[i] += hits;
    for (int k = 0; k < hits; ++k) ++degree[row_buffer[k]];
  }

  // Pass 2: lower neighbors in ascending order, then the upper ones.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[v].reserve(static_cast<std::size_t>(degree[v]));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = row_start[i]; k < row_start[i + 1]; ++k) adj[upper[k]].push_back(i);
  }
  for (int v = 0; v < n; ++v) {
    adj[v].insert(adj[v].end(), upper.begin() + static_cast<std::ptrdiff_t>(row_start[v]),
                  upper.begin() + static_cast<std::ptrdiff_t>(row_start[v + 1]));
  }
  sg.graph = Graph::from_sorted_neighbors(std::move(adj));
  return sg;
}

GroupCounts group_counts(const SampledGraph& sg) {
  GroupCounts c;
  c.counts.assign(static_cast<std::size_t>(sg.blocks), 0);
  for (int label : sg.group) ++c.counts[label];
  return c;
}

VectorQ empirical_concentration(const GroupCounts& counts) {
  const int n = counts.total();
  if (n <= 0) throw Error(ErrorKind::MalformedInput, "empirical concentration needs at least one node");
  VectorQ x(static_cast<Eigen::Index>(counts.size()));
  for (std::size_t i = 0; i < counts.size(); ++i) x(static_cast<Eigen::Index>(i)) = Rational(counts[i], n);
  return x;
}

VectorQ empirical_concentration(const SampledGraph& sg) { return empirical_concentration(group_counts(sg)); }

void write_graph_dump(std::ostream& out, const SampledGraph& sg) {
  out << sg.node_count() << ' ' << sg.blocks << '\n';
  for (std::size_t v = 0; v < sg.group.size(); ++v) {
    if (v) out << ' ';
    out << sg.group[v] + 1;
  }
  out << '\n';
  for (auto [u, v] : sg.graph.edges()) out << u << ' ' << v << '\n';
}

namespace {

[[noreturn]] void bad_dump(const std::string& what) { throw Error(ErrorKind::MalformedInput, "graph dump: " + what); }

}  // namespace

SampledGraph read_graph_dump(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) bad_dump("missing header line \"n q\"");
  long long n = -1;
  long long q = -1;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n >> q) || (header >> rest)) bad_dump("header must be \"n q\"");
  }
  if (n < 0 || q < 0 || n > (1 << 30) || q > (1 << 20)) bad_dump("header values out of range");
  if (n > 0 && q == 0) bad_dump("nodes need at least one group");

  SampledGraph sg;
  sg.blocks = static_cast<int>(q);
  if (!std::getline(in, line)) bad_dump("missing group label line");
  {
    std::istringstream labels(line);
    long long label = 0;
    while (labels >> label) {
      if (label < 1 || label > q) bad_dump("group label " + std::to_string(label) + " outside 1.." + std::to_string(q));
      sg.group.push_back(static_cast<int>(label - 1));
    }
    if (!labels.eof()) bad_dump("non-numeric group label");
  }
  if (static_cast<long long>(sg.group.size()) != n) {
    bad_dump("expected " + std::to_string(n) + " group labels, got " + std::to_string(sg.group.size()));
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) bad_dump("line " + std::to_string(line_no) + " is not \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      bad_dump("line " + std::to_string(line_no) + " has an invalid edge");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  sg.graph = Graph::from_edges(static_cast<int>(n), edges);
  return sg;
}

}  // namespace hprop
