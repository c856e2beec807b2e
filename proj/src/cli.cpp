#include "hprop/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hprop/conditions.hpp"
#include "hprop/error.hpp"
#include "hprop/hamdec.hpp"
#include "hprop/json_io.hpp"
#include "hprop/montecarlo.hpp"
#include "hprop/presets.hpp"
#include "hprop/sampling.hpp"

namespace hprop::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DisconnectedSkeleton:
    case ErrorKind::NotALineGraphon:
    case ErrorKind::NotTwoBlocks:
      return kExitPrecondition;
    default:
      return kExitInput;
  }
}

struct AnalyzeArgs {
  std::string graphon;
};

struct SampleArgs {
  std::string graphon;
  int n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct DecideArgs {
  std::string graph;
  bool constructive = false;
  std::string graphon;
};

struct ExperimentArgs {
  std::string preset;
  std::string graphon;
  std::vector<int> n_values;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string method = "matching";
  std::string out;
  int threads = 0;
  bool no_timing = false;
};

int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const StepGraphon g = read_graphon_file(a.graphon);
  out << to_json(classify(g)).dump(2) << '\n';
  return kExitOk;
}

int do_sample(const SampleArgs& a, std::ostream& out) {
  const StepGraphon g = read_graphon_file(a.graphon);
  if (a.n < 1) throw Error(ErrorKind::MalformedInput, "--n must be positive");
  const SampledGraph sg = sample_graph(g, a.n, a.seed);
  if (a.out.empty()) {
    write_graph_dump(out, sg);
    return kExitOk;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::MalformedInput, "cannot write " + a.out);
  write_graph_dump(file, sg);
  return kExitOk;
}

nlohmann::json cycles_json(const HamiltonianDecomposition& hd) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : hd.cycles) cycles.push_back(c);
  return cycles;
}

int do_decide(const DecideArgs& a, std::ostream& out) {
  std::ifstream in(a.graph);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open graph dump " + a.graph);
  const SampledGraph sg = read_graph_dump(in);

  nlohmann::json doc;
  if (a.constructive) {
    if (a.graphon.empty()) throw Error(ErrorKind::MalformedInput, "--constructive requires --graphon");
    const StepGraphon g = read_graphon_file(a.graphon);
    if (g.blocks() != sg.blocks) {
      throw Error(ErrorKind::DimensionMismatch, "graphon has " + std::to_string(g.blocks()) +
                                                    " blocks but the dump has " + std::to_string(sg.blocks) +
                                                    " groups");
    }
    const auto built = construct_line_decomposition(sg, skeleton_graph(g));
    doc["constructive_outcome"] = built.tag();
    if (built.success()) {
      if (!verify_decomposition(sg, *built.decomposition)) {
        throw std::logic_error("constructed decomposition failed verification");
      }
      doc["decision"] = true;
      doc["method"] = "constructive";
      doc["cycles"] = cycles_json(*built.decomposition);
      out << doc.dump(2) << '\n';
      return kExitOk;
    }
  }

  const auto decided = has_hamiltonian_decomposition(sg);
  doc["decision"] = decided.decision;
  doc["method"] = "matching";
  if (decided.decision) {
    if (!verify_decomposition(sg, *decided.decomposition)) {
      throw std::logic_error("matching decomposition failed verification");
    }
    doc["cycles"] = cycles_json(*decided.decomposition);
  } else {
    doc["cycles"] = nlohmann::json::array();
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

std::string summary_text(const std::string& title, const std::string& expected, const ExperimentConfig& cfg,
                         const ExperimentResult& result) {
  std::ostringstream s;
  s << title << '\n';
  s << "method " << to_string(cfg.method) << ", " << cfg.trials_per_n << " trials per n, master seed "
    << cfg.master_seed << '\n';
  if (!expected.empty()) s << "expected limit: " << expected << '\n';
  for (const auto& e : result.estimates) {
    char line[160];
    std::snprintf(line, sizeof line, "n = %6d  P(HD) = %.4f  95%% CI [%.4f, %.4f]  (%d/%d)\n", e.n, e.estimate,
                  e.ci_low, e.ci_high, e.successes, e.trials);
    s << line;
  }
  return s.str();
}

int do_experiment(const ExperimentArgs& a, bool allow_custom, std::ostream& out) {
  ExperimentConfig cfg{validate_graphon({0, 1}, MatrixQ::Constant(1, 1, Rational(1))), {}, 1, 0, Method::Matching, true};
  std::string title;
  std::string expected;
  nlohmann::json summary;
  if (!a.preset.empty()) {
    Preset p = preset(a.preset);
    cfg = p.config;
    title = "preset " + p.name + ": " + p.description;
    expected = p.expected_limit;
    summary["preset"] = p.name;
    summary["expected_limit"] = p.expected_limit;
    if (a.trials > 0) cfg.trials_per_n = a.trials;
  } else {
    if (!allow_custom) throw Error(ErrorKind::MalformedInput, "--preset is required");
    if (a.graphon.empty()) throw Error(ErrorKind::MalformedInput, "either --preset or --graphon is required");
    cfg.graphon = read_graphon_file(a.graphon);
    cfg.n_values = a.n_values;
    cfg.trials_per_n = a.trials > 0 ? a.trials : 100;
    cfg.master_seed = a.seed;
    cfg.method = parse_method(a.method);
    title = "graphon " + a.graphon;
    summary["preset"] = nullptr;
  }
  cfg.record_timing = !a.no_timing;
  validate(cfg);

  const fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw Error(ErrorKind::MalformedInput, "cannot create output directory " + a.out);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw Error(ErrorKind::MalformedInput, "cannot write " + (dir / name).string());
    return f;
  };
  // Probe writability before spending time on trials.
  { open("trials.csv"); }

  const ExperimentResult result = run_trials(cfg, a.threads);

  {
    auto f = open("trials.csv");
    write_trial_csv(f, result.records, cfg.graphon.blocks());
  }
  {
    auto f = open("convergence.csv");
    write_convergence_table(f, result.estimates);
  }

  summary["graphon"] = graphon_to_json(cfg.graphon);
  summary["method"] = std::string(to_string(cfg.method));
  summary["master_seed"] = cfg.master_seed;
  summary["trials_per_n"] = cfg.trials_per_n;
  summary["n_values"] = cfg.n_values;
  if (is_connected(skeleton_graph(cfg.graphon))) {
    summary["analysis"] = to_json(classify(cfg.graphon));
  } else {
    summary["analysis"] = nullptr;
  }
  summary["estimates"] = nlohmann::json::array();
  for (const auto& e : result.estimates) summary["estimates"].push_back(to_json(e));
  if (cfg.graphon.blocks() == 2) {
    summary["conditional_split"] = nlohmann::json::array();
    for (int n : cfg.n_values) {
      const auto records = records_for(result, n);
      const auto split = conditional_split(records);
      summary["conditional_split"].push_back({{"n", n},
                                               {"first_larger", to_json(split.first_larger)},
                                               {"second_larger", to_json(split.second_larger)},
                                               {"tie", to_json(split.tie)}});
    }
  }
  {
    auto f = open("summary.json");
    f << summary.dump(2) << '\n';
  }
  const std::string text = summary_text(title, expected, cfg, result);
  {
    auto f = open("summary.txt");
    f << text;
  }
  out << text;
  return kExitOk;
}

void add_experiment_flags(CLI::App* cmd, ExperimentArgs& a, bool custom) {
  cmd->add_option("--preset", a.preset, "Pinned experiment")
      ->check(CLI::IsMember({"borderline", "line", "no-odd-cycle", "outside-polytope"}));
  cmd->add_option("--out", a.out, "Output directory")->required();
  cmd->add_option("--threads", a.threads, "Worker cap (0 = all cores); results do not depend on it");
  cmd->add_option("--trials", a.trials, "Trials per n (overrides the preset value)");
  cmd->add_flag("--no-timing", a.no_timing, "Record elapsed_ms as 0 for byte-reproducible output");
  if (custom) {
    cmd->add_option("--graphon", a.graphon, "Graphon JSON file");
    cmd->add_option("--n", a.n_values, "Node counts, strictly increasing")->delimiter(',');
    cmd->add_option("--seed", a.seed, "Master seed");
    cmd->add_option("--method", a.method, "matching | constructive | both");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Step-graphon H-property analysis, sampling and Hamiltonian decompositions"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Evaluate the H-property conditions of a graphon");
  analyze_cmd->add_option("--graphon", analyze.graphon, "Graphon JSON file")->required();

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample a graph and write an edge-list dump");
  sample_cmd->add_option("--graphon", sample.graphon, "Graphon JSON file")->required();
  sample_cmd->add_option("--n", sample.n, "Node count")->required();
  sample_cmd->add_option("--seed", sample.seed, "Seed")->required();
  sample_cmd->add_option("--out", sample.out, "Output file (stdout if omitted)");

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a dumped graph has a Hamiltonian decomposition");
  decide_cmd->add_option("--graph", decide.graph, "Graph dump file")->required();
  decide_cmd->add_flag("--constructive", decide.constructive, "Try the staged line-graphon construction first");
  decide_cmd->add_option("--graphon", decide.graphon, "Graphon JSON file (with --constructive)");

  ExperimentArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate for a preset or a graphon file");
  add_experiment_flags(mc_cmd, mc, true);

  ExperimentArgs reproduce;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Run a pinned preset experiment");
  add_experiment_flags(reproduce_cmd, reproduce, false);
  reproduce_cmd->get_option("--preset")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*analyze_cmd) return do_analyze(analyze, out);
    if (*sample_cmd) return do_sample(sample, out);
    if (*decide_cmd) return do_decide(decide, out);
    if (*mc_cmd) return do_experiment(mc, true, out);
    if (*reproduce_cmd) return do_experiment(reproduce, false, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitInput;
}

}  // namespace hprop::cli
