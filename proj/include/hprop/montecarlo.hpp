#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hprop/graphon.hpp"
#include "hprop/hamdec.hpp"
#include "hprop/sampling.hpp"

namespace hprop {

enum class Method { Matching, Constructive, Both };

std::string_view to_string(Method method) noexcept;
/// Throws Error(MalformedInput) on anything but "matching", "constructive", "both".
Method parse_method(std::string_view text);

struct ExperimentConfig {
  StepGraphon graphon;
  std::vector<int> n_values;
  int trials_per_n = 1;
  std::uint64_t master_seed = 0;
  Method method = Method::Matching;
  /// When false every elapsed_ms is recorded as 0, making trial streams
  /// byte-for-byte reproducible.
  bool record_timing = true;
};

/// Throws Error(MalformedInput) unless trials_per_n >= 1 and n_values is
/// nonempty, positive and strictly increasing.
void validate(const ExperimentConfig& cfg);

/// Seed of trial `trial` at node count n.
std::uint64_t trial_seed(std::uint64_t master_seed, int n, int trial) noexcept;

struct TrialRecord {
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  GroupCounts counts;
  bool decision = false;
  /// Matching-based answer; only meaningful when the method includes matching.
  bool matching_decision = false;
  ConstructiveOutcome constructive = ConstructiveOutcome::NotRun;
  std::string constructive_tag = "not_run";
  /// A constructive success whose cycles passed verify_decomposition.
  bool constructive_verified = false;
  double elapsed_ms = 0.0;
};

/// Success frequency with a 95% Wilson score interval.
struct Estimate {
  int n = 0;
  int trials = 0;
  int successes = 0;
  double estimate = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double mean_elapsed_ms = 0.0;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

inline constexpr double kZ95 = 1.959963984540054;

Interval wilson_interval(int successes, int trials, double z = kZ95);

/// Frequency of `decision` over records (n taken from the first record).
Estimate estimate_from(std::span<const TrialRecord> records);

struct ExperimentResult {
  std::vector<Estimate> estimates;
  std::vector<TrialRecord> records;  // ordered by (n, trial)
};

/// One trial, decided by the configured method(s). `line` is the path order
/// of a line graphon, or nullopt (constructive is then not run).
TrialRecord run_trial(const ExperimentConfig& cfg, const std::optional<std::vector<int>>& line, int n, int trial);

/// All trials on up to `threads` workers (0 = hardware concurrency). Output
/// does not depend on the worker count or scheduling.
ExperimentResult run_trials(const ExperimentConfig& cfg, int threads = 0);

/// Two-block records split by the sign of n_1 - n_2.
struct ConditionalSplit {
  Estimate first_larger;   // n_1 > n_2
  Estimate second_larger;  // n_1 < n_2
  Estimate tie;            // n_1 = n_2
};

/// Throws Error(NotTwoBlocks) if any record has a group count other than 2.
ConditionalSplit conditional_split(std::span<const TrialRecord> records);

/// Records with the given n, in order.
std::vector<TrialRecord> records_for(const ExperimentResult& result, int n);

/// Header: n,trial,seed,n_1..n_q,decision,constructive_outcome,elapsed_ms.
void write_trial_csv(std::ostream& out, std::span<const TrialRecord> records, int blocks);

/// Header: n,estimate,ci_low,ci_high,mean_elapsed_ms.
void write_convergence_table(std::ostream& out, std::span<const Estimate> estimates);
std::string convergence_table(const ExperimentResult& result);

}  // namespace hprop
