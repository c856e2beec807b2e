#include "hprop/presets.hpp"

#include "hprop/error.hpp"

namespace hprop {

namespace {
constexpr std::uint64_t kPresetSeed = 20220315;
}

StepGraphon line_graphon(const std::vector<Rational>& partition, const Rational& p) {
  const auto q = static_cast<Eigen::Index>(partition.size()) - 1;
  MatrixQ values = MatrixQ::Zero(q, q);
  for (Eigen::Index i = 0; i + 1 < q; ++i) values(i, i + 1) = values(i + 1, i) = p;
  values(q - 1, q - 1) = p;
  return validate_graphon(partition, values);
}

StepGraphon borderline_graphon(const Rational& p) {
  return validate_graphon({0, Rational(1, 2), 1}, RationalRows{{0, p}, {p, p}});
}

StepGraphon four_block_line_graphon(const Rational& p) {
  return line_graphon({0, Rational(1, 5), Rational(1, 2), Rational(3, 4), 1}, p);
}

StepGraphon bipartite_graphon(const Rational& p) {
  return validate_graphon({0, Rational(1, 2), 1}, RationalRows{{0, p}, {p, 0}});
}

StepGraphon outside_polytope_graphon(const Rational& p) {
  return line_graphon({0, Rational(3, 5), Rational(4, 5), Rational(9, 10), 1}, p);
}

std::vector<std::string> preset_names() { return {"borderline", "line", "no-odd-cycle", "outside-polytope"}; }

Preset preset(std::string_view name) {
  if (name == "borderline") {
    return {"borderline", "two blocks, zero upper-left block, p = 1/2 elsewhere; on the polytope boundary", "0.5",
            ExperimentConfig{borderline_graphon(), {500, 1000, 2000}, 2000, kPresetSeed, Method::Both, true}};
  }
  if (name == "line") {
    return {"line", "four-block line graphon, partition (0, 1/5, 1/2, 3/4, 1), nonzero blocks 1/2; relative interior",
            "1", ExperimentConfig{four_block_line_graphon(), {200, 400, 800}, 500, kPresetSeed, Method::Both, true}};
  }
  if (name == "no-odd-cycle") {
    return {"no-odd-cycle", "two blocks with zero diagonal (bipartite skeleton), odd node counts", "0",
            ExperimentConfig{bipartite_graphon(), {101, 201, 401}, 200, kPresetSeed, Method::Matching, true}};
  }
  if (name == "outside-polytope") {
    return {"outside-polytope", "four-block line graphon with concentration (3/5, 1/5, 1/10, 1/10); outside the polytope",
            "0", ExperimentConfig{outside_polytope_graphon(), {250, 500, 1000}, 500, kPresetSeed, Method::Both, true}};
  }
  throw Error(ErrorKind::MalformedInput, "unknown preset \"" + std::string(name) + "\"");
}

}  // namespace hprop
