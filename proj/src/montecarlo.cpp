#include "hprop/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iterator>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hprop/error.hpp"
#include "hprop/random.hpp"

namespace hprop {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::Matching: return "matching";
    case Method::Constructive: return "constructive";
    case Method::Both: return "both";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "matching") return Method::Matching;
  if (text == "constructive") return Method::Constructive;
  if (text == "both") return Method::Both;
  throw Error(ErrorKind::MalformedInput, "unknown method \"" + std::string(text) + "\"");
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.trials_per_n < 1) throw Error(ErrorKind::MalformedInput, "trials per n must be at least 1");
  if (cfg.n_values.empty()) throw Error(ErrorKind::MalformedInput, "n grid is empty");
  for (std::size_t i = 0; i < cfg.n_values.size(); ++i) {
    if (cfg.n_values[i] < 1) throw Error(ErrorKind::MalformedInput, "node counts must be positive");
    if (i > 0 && cfg.n_values[i] <= cfg.n_values[i - 1]) {
      throw Error(ErrorKind::MalformedInput, "n grid must be strictly increasing");
    }
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial) noexcept {
  return derive_seed(master_seed, {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(trial)});
}

Interval wilson_interval(int successes, int trials, double z) {
  if (trials <= 0) return {0.0, 1.0};
  const double nn = trials;
  const double p = successes / nn;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nn;
  const double center = (p + z2 / (2.0 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
  return {std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
}

Estimate estimate_from(std::span<const TrialRecord> records) {
  Estimate e;
  e.trials = static_cast<int>(records.size());
  if (!records.empty()) e.n = records.front().n;
  double elapsed = 0.0;
  for (const auto& r : records) {
    e.successes += r.decision ? 1 : 0;
    elapsed += r.elapsed_ms;
  }
  if (e.trials > 0) {
    e.estimate = static_cast<double>(e.successes) / e.trials;
    e.mean_elapsed_ms = elapsed / e.trials;
  }
  const auto ci = wilson_interval(e.successes, e.trials);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  return e;
}

TrialRecord run_trial(const ExperimentConfig& cfg, const std::optional<std::vector<int>>& line, int n, int trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.n = n;
  rec.trial = trial;
  rec.seed = trial_seed(cfg.master_seed, n, trial);

  const SampledGraph sg = sample_graph(cfg.graphon, n, rec.seed);
  rec.counts = group_counts(sg);

  const bool use_matching = cfg.method != Method::Constructive;
  const bool use_constructive = cfg.method != Method::Matching;

  if (use_matching) {
    auto decided = has_hamiltonian_decomposition(sg);
    if (decided.decision && !verify_decomposition(sg, *decided.decomposition)) {
      throw std::logic_error("matching decomposition failed verification");
    }
    rec.matching_decision = decided.decision;
  }
  if (use_constructive && line) {
    auto built = construct_line_decomposition(sg, *line);
    rec.constructive = built.outcome;
    rec.constructive_tag = built.tag();
    rec.constructive_verified = built.success() && verify_decomposition(sg, *built.decomposition);
    if (use_matching && built.success() && !rec.matching_decision) {
      throw std::logic_error("constructive decomposition found where the exact decision says none exists");
    }
  }
  rec.decision = use_matching ? rec.matching_decision : rec.constructive_verified;

  if (cfg.record_timing) {
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return rec;
}

ExperimentResult run_trials(const ExperimentConfig& cfg, int threads) {
  validate(cfg);
  const auto line = line_order(skeleton_graph(cfg.graphon));
  const std::size_t per_n = static_cast<std::size_t>(cfg.trials_per_n);
  const std::size_t total = cfg.n_values.size() * per_n;

  ExperimentResult result;
  result.records.resize(total);
  auto work = [&](std::size_t index) {
    const int n = cfg.n_values[index / per_n];
    const int trial = static_cast<int>(index % per_n);
    result.records[index] = run_trial(cfg, line, n, trial);
  };

  std::size_t workers = threads > 0 ? static_cast<std::size_t>(threads)
                                    : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, total);
  if (workers <= 1) {
    for (std::size_t i = 0; i < total; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < total && !failed; i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            failed = true;
          }
        }
      });
    }
    pool.clear();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (std::size_t k = 0; k < cfg.n_values.size(); ++k) {
    result.estimates.push_back(estimate_from(std::span(result.records).subspan(k * per_n, per_n)));
  }
  return result;
}

ConditionalSplit conditional_split(std::span<const TrialRecord> records) {
  std::vector<TrialRecord> larger;
  std::vector<TrialRecord> smaller;
  std::vector<TrialRecord> tie;
  for (const auto& r : records) {
    if (r.counts.size() != 2) {
      throw Error(ErrorKind::NotTwoBlocks, "conditional split needs a two-block graphon, record has " +
                                               std::to_string(r.counts.size()) + " groups");
    }
    const int diff = r.counts[0] - r.counts[1];
    (diff > 0 ? larger : diff < 0 ? smaller : tie).push_back(r);
  }
  ConditionalSplit split{estimate_from(larger), estimate_from(smaller), estimate_from(tie)};
  if (!records.empty()) split.first_larger.n = split.second_larger.n = split.tie.n = records.front().n;
  return split;
}

std::vector<TrialRecord> records_for(const ExperimentResult& result, int n) {
  std::vector<TrialRecord> out;
  std::copy_if(result.records.begin(), result.records.end(), std::back_inserter(out),
               [n](const TrialRecord& r) { return r.n == n; });
  return out;
}

namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

}  // namespace

void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records, int blocks) {
  out << "n,trial,seed";
  for (int i = 1; i <= blocks; ++i) out << ",n_" << i;
  out << ",decision,constructive_outcome,elapsed_ms\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.trial << ',' << r.seed;
    for (int c : r.counts.counts) out << ',' << c;
    out << ',' << (r.decision ? 1 : 0) << ',' << r.constructive_tag << ',' << fixed(r.elapsed_ms, 3) << '\n';
  }
}

void write_convergence_table(std::ostream& out, std::span<const Estimate> estimates) {
  out << "n,estimate,ci_low,ci_high,mean_elapsed_ms\n";
  for (const auto& e : estimates) {
    out << e.n << ',' << fixed(e.estimate, 6) << ',' << fixed(e.ci_low, 6) << ',' << fixed(e.ci_high, 6) << ','
        << fixed(e.mean_elapsed_ms, 3) << '\n';
  }
}

std::string convergence_table(const ExperimentResult& result) {
  std::ostringstream out;
  write_convergence_table(out, result.estimates);
  return out.str();
}

}  // namespace hprop
