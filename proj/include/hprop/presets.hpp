#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hprop/montecarlo.hpp"

namespace hprop {

/// A pinned experiment: graphon, n grid, trial count, master seed and method.
struct Preset {
  std::string name;
  std::string description;
  /// Limit the estimates are expected to approach.
  std::string expected_limit;
  ExperimentConfig config;
};

std::vector<std::string> preset_names();

/// Throws Error(MalformedInput) for an unknown name.
Preset preset(std::string_view name);

/// Reference graphons used by the presets and tests.
StepGraphon borderline_graphon(const Rational& p = Rational(1, 2));
StepGraphon four_block_line_graphon(const Rational& p = Rational(1, 2));
StepGraphon bipartite_graphon(const Rational& p = Rational(1, 2));
/// Line graphon with concentration (3/5, 1/5, 1/10, 1/10): outside the edge polytope.
StepGraphon outside_polytope_graphon(const Rational& p = Rational(1, 2));
/// Line graphon (path 0-1-...-(q-1), loop at q-1) with the given partition.
StepGraphon line_graphon(const std::vector<Rational>& partition, const Rational& p);

}  // namespace hprop
