// Acceptance gate: one PASS/FAIL line per criterion; exit status 1 if any fail.

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>

#include "hprop/conditions.hpp"
#include "hprop/hamdec.hpp"
#include "hprop/montecarlo.hpp"
#include "hprop/presets.hpp"
#include "hprop/random.hpp"
#include "hprop/sampling.hpp"

using namespace hprop;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

ExperimentConfig at(const char* name, std::vector<int> ns, int trials = 0) {
  ExperimentConfig cfg = preset(name).config;
  cfg.n_values = std::move(ns);
  if (trials > 0) cfg.trials_per_n = trials;
  return cfg;
}

VectorQ from_weights(const std::vector<long long>& w) {
  long long total = 0;
  for (long long v : w) total += v;
  VectorQ x(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) x(static_cast<Eigen::Index>(i)) = Rational(w[i], total);
  return x;
}

std::string show(const VectorQ& x) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x(i));
  return s + ")";
}

SkeletonGraph path_with_loop(int q) {
  SkeletonGraph s;
  s.node_count = q;
  for (int i = 0; i + 1 < q; ++i) s.edges.emplace_back(i, i + 1);
  s.self_loops = {q - 1};
  return s;
}

void borderline_limit_and_split() {
  const auto result = run_trials(at("borderline", {2000}));
  const Estimate& e = result.estimates.front();
  report(1, "borderline limit", e.estimate >= 0.46 && e.estimate <= 0.54,
         fmt("estimate %.4f (%d/%d) at n=2000, 95%% CI [%.4f, %.4f], required [0.46, 0.54]", e.estimate, e.successes,
             e.trials, e.ci_low, e.ci_high));

  const auto split = conditional_split(result.records);
  const bool ok = split.first_larger.trials > 0 && split.first_larger.successes == 0 &&
                  split.second_larger.trials > 0 && split.second_larger.estimate >= 0.99;
  report(2, "conditional split", ok,
         fmt("n1>n2: %d/%d, n1<n2: %d/%d (%.4f), ties: %d/%d; required 0 and >= 0.99",
             split.first_larger.successes, split.first_larger.trials, split.second_larger.successes,
             split.second_larger.trials, split.second_larger.estimate, split.tie.successes, split.tie.trials));
}

void sufficiency_regime() {
  const auto result = run_trials(at("line", {800}));
  const Estimate& e = result.estimates.front();
  int built = 0;
  int verified = 0;
  for (const auto& r : result.records) {
    if (r.constructive == ConstructiveOutcome::Success) {
      ++built;
      if (r.constructive_verified) ++verified;
    }
  }
  const double rate = static_cast<double>(built) / static_cast<double>(result.records.size());
  report(3, "sufficiency regime", e.estimate >= 0.98 && rate >= 0.95 && verified == built,
         fmt("matching %.4f (%d/%d), constructive %.4f, verified %d/%d; required >= 0.98, >= 0.95, all", e.estimate,
             e.successes, e.trials, rate, verified, built));
}

void necessity_regime() {
  const auto bip = run_trials(preset("no-odd-cycle").config);
  bool all_zero = true;
  std::string ns;
  for (const auto& e : bip.estimates) {
    all_zero = all_zero && e.successes == 0 && e.n % 2 == 1;
    ns += fmt("%s%d:%d/%d", ns.empty() ? "" : " ", e.n, e.successes, e.trials);
  }
  const auto out = run_trials(at("outside-polytope", {1000}));
  const Estimate& e = out.estimates.front();
  report(4, "necessity regime", all_zero && e.estimate <= 0.02,
         fmt("(a) bipartite odd n %s; (b) outside polytope n=1000 estimate %.4f (%d/%d), required <= 0.02",
             ns.c_str(), e.estimate, e.successes, e.trials));
}

void oracle_equivalence() {
  std::mt19937_64 gen(5150);
  int total = 0;
  int agree = 0;
  int positive = 0;
  std::string first_bad;
  for (int rep = 0; rep < 12000; ++rep) {
    const int n = 1 + static_cast<int>(gen() % 8);
    std::bernoulli_distribution coin((1 + static_cast<double>(gen() % 19)) / 20.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(gen)) edges.emplace_back(i, j);
      }
    }
    const Graph g = Graph::from_edges(n, edges);
    const auto fast = has_hamiltonian_decomposition(g);
    const bool slow = brute_force_hd(g);
    const bool sound = !fast.decision || verify_decomposition(g, *fast.decomposition);
    ++total;
    if (fast.decision == slow && sound) {
      ++agree;
    } else if (first_bad.empty()) {
      std::ostringstream s;
      s << "n=" << n << " edges";
      for (auto [u, v] : edges) s << ' ' << u << '-' << v;
      first_bad = s.str();
    }
    positive += slow ? 1 : 0;
  }
  report(5, "oracle equivalence", agree == total && total >= 10000,
         fmt("%d/%d agree (%d with a decomposition)%s%s", agree, total, positive, first_bad.empty() ? "" : "; first mismatch ",
             first_bad.c_str()));
}

void exact_boundary() {
  const auto border = classify(borderline_graphon());
  VectorQ one_zero(2);
  one_zero << 1, 0;
  const bool b_ok = border.verdict == Verdict::Borderline && border.membership.certificate.size() == 2 &&
                    border.membership.certificate == one_zero;
  const auto fig = classify(four_block_line_graphon());
  VectorQ alpha(4);
  alpha << Rational(2, 5), Rational(1, 5), Rational(3, 10), Rational(1, 10);
  const bool f_ok = fig.verdict == Verdict::HProperty && fig.membership.certificate.size() == 4 &&
                    fig.membership.certificate == alpha;
  report(6, "exact boundary classification", b_ok && f_ok,
         fmt("borderline %s alpha=%s; four-block line %s alpha=%s", std::string(to_string(border.verdict)).c_str(),
             show(border.membership.certificate).c_str(), std::string(to_string(fig.verdict)).c_str(),
             show(fig.membership.certificate).c_str()));
}

void alternating_sums_vs_lp() {
  std::mt19937_64 gen(4444);
  int agree = 0;
  int interior = 0;
  int boundary = 0;
  std::string first_bad;
  constexpr int total = 1000;
  for (int rep = 0; rep < total; ++rep) {
    const int q = 2 + rep % 7;
    const auto inc = incidence_matrix(path_with_loop(q));
    VectorQ x;
    if (rep % 4 == 0) {
      // Image of a random nonnegative alpha; zeros land on the boundary.
      std::vector<long long> a(static_cast<std::size_t>(q));
      for (auto& v : a) v = gen() % 3 == 0 ? 0 : 1 + static_cast<long long>(gen() % 12);
      if (std::all_of(a.begin(), a.end(), [](long long v) { return v == 0; })) a[0] = 1;
      x = inc.z * from_weights(a);
    } else {
      std::vector<long long> w(static_cast<std::size_t>(q));
      for (auto& v : w) v = 1 + static_cast<long long>(gen() % 20);
      x = from_weights(w);
    }
    const VectorQ s = line_inequalities(x);
    bool all_positive = true;
    for (Eigen::Index k = 0; k < s.size(); ++k) all_positive = all_positive && s(k) > 0;
    const auto m = polytope_membership(inc, x);
    const bool relint = m.status == MembershipStatus::RelativeInterior;
    interior += relint ? 1 : 0;
    boundary += m.status == MembershipStatus::Boundary ? 1 : 0;
    if (relint == all_positive) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = show(x);
    }
  }
  report(7, "alternating sums vs exact LP", agree == total,
         fmt("%d/%d agree (%d relative interior, %d boundary)%s%s", agree, total, interior, boundary,
             first_bad.empty() ? "" : "; disagreement at x=", first_bad.c_str()));
}

void rank_cross_check() {
  std::mt19937_64 gen(8080);
  int agree = 0;
  int odd = 0;
  constexpr int total = 200;
  std::string first_bad;
  for (int rep = 0; rep < total; ++rep) {
    const int q = 2 + static_cast<int>(gen() % 7);
    SkeletonGraph s;
    s.node_count = q;
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < q; ++v) edges.emplace_back(static_cast<int>(gen() % static_cast<unsigned>(v)), v);
    const unsigned density = 1 + static_cast<unsigned>(gen() % 4);
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        if (gen() % 8 < density) edges.emplace_back(i, j);
      }
      if (gen() % 10 == 0) s.self_loops.push_back(i);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    s.edges = edges;
    const bool has_odd = has_odd_cycle(s);
    odd += has_odd ? 1 : 0;
    const int rank = polytope_rank(incidence_matrix(s));
    if (rank == (has_odd ? q - 1 : q - 2)) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = fmt("q=%d rank=%d odd=%d", q, rank, has_odd ? 1 : 0);
    }
  }
  report(8, "rank cross-check", agree == total,
         fmt("%d/%d consistent (%d with an odd cycle)%s%s", agree, total, odd, first_bad.empty() ? "" : "; ",
             first_bad.c_str()));
}

void triangle_frequency() {
  const auto g = validate_graphon({Rational(0), Rational(1)}, RationalRows{{Rational(3, 10)}});
  int found = 0;
  constexpr int total = 500;
  for (int seed = 0; seed < total; ++seed) {
    const auto sg = sample_graph(g, 60, derive_seed(1960, {static_cast<std::uint64_t>(seed)}));
    if (find_triangle(sg.graph)) ++found;
  }
  const double rate = static_cast<double>(found) / total;
  report(9, "triangles in ER(60, 3/10)", rate >= 0.99, fmt("%d/%d = %.4f, required >= 0.99", found, total, rate));
}

void reproducibility() {
  // Each preset over its full n grid; trials cut to keep three reruns cheap.
  bool ok = true;
  std::string detail;
  for (const auto& name : preset_names()) {
    ExperimentConfig cfg = preset(name).config;
    cfg.trials_per_n = 40;
    cfg.record_timing = false;
    std::string reference;
    for (int workers : {1, 4, 8}) {
      const auto result = run_trials(cfg, workers);
      std::ostringstream csv;
      write_trial_csv(csv, result.records, cfg.graphon.blocks());
      const std::string text = csv.str() + convergence_table(result);
      if (workers == 1) {
        reference = text;
      } else if (text != reference) {
        ok = false;
        detail += " " + name + "@" + std::to_string(workers) + " differs;";
      }
    }
    detail += fmt(" %s %zu bytes;", name.c_str(), reference.size());
  }
  report(10, "reproducibility across 1/4/8 workers", ok, "identical CSV streams:" + detail);
}

}  // namespace

int main() {
  borderline_limit_and_split();
  sufficiency_regime();
  necessity_regime();
  oracle_equivalence();
  exact_boundary();
  alternating_sums_vs_lp();
  rank_cross_check();
  triangle_frequency();
  reproducibility();
  std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
