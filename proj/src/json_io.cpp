#include "hprop/json_io.hpp"

#include <fstream>

#include "hprop/error.hpp"

namespace hprop {

namespace {

Rational rational_field(const nlohmann::json& v, const std::string& where) {
  if (!v.is_string()) {
    throw Error(ErrorKind::MalformedInput, where + " must be a string holding an exact rational");
  }
  return parse_rational(v.get<std::string>());
}

nlohmann::json strings(const VectorQ& v) { return to_strings(v); }

}  // namespace

StepGraphon graphon_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("partition") || !doc.contains("values")) {
    throw Error(ErrorKind::MalformedInput, "graphon document needs \"partition\" and \"values\"");
  }
  const auto& p = doc.at("partition");
  const auto& vals = doc.at("values");
  if (!p.is_array() || !vals.is_array()) {
    throw Error(ErrorKind::MalformedInput, "\"partition\" and \"values\" must be arrays");
  }
  std::vector<Rational> partition;
  for (std::size_t i = 0; i < p.size(); ++i) partition.push_back(rational_field(p[i], "partition[" + std::to_string(i) + "]"));

  std::vector<std::vector<Rational>> values;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i].is_array()) throw Error(ErrorKind::MalformedInput, "values[" + std::to_string(i) + "] must be an array");
    auto& row = values.emplace_back();
    for (std::size_t j = 0; j < vals[i].size(); ++j) {
      row.push_back(rational_field(vals[i][j], "values[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
  }
  return validate_graphon(std::move(partition), values);
}

nlohmann::json graphon_to_json(const StepGraphon& g) {
  nlohmann::json doc;
  doc["partition"] = nlohmann::json::array();
  for (const auto& s : g.partition()) doc["partition"].push_back(to_string(s));
  doc["values"] = nlohmann::json::array();
  for (int i = 0; i < g.blocks(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.blocks(); ++j) row.push_back(to_string(g.value(i, j)));
    doc["values"].push_back(std::move(row));
  }
  return doc;
}

StepGraphon read_graphon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedInput, "cannot open graphon file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, path.string() + ": " + e.what());
  }
  return graphon_from_json(doc);
}

// Skeleton nodes are reported 1-based, matching group labels in graph dumps.
nlohmann::json to_json(const SkeletonGraph& s) {
  nlohmann::json out;
  out["nodes"] = s.node_count;
  out["self_loops"] = nlohmann::json::array();
  for (int v : s.self_loops) out["self_loops"].push_back(v + 1);
  out["edges"] = nlohmann::json::array();
  for (auto [a, b] : s.edges) out["edges"].push_back({a + 1, b + 1});
  return out;
}

nlohmann::json to_json(const MembershipResult& m, const IncidenceMatrix& z) {
  nlohmann::json out;
  out["status"] = std::string(to_string(m.status));
  nlohmann::json columns = nlohmann::json::array();
  for (const auto& e : z.column_edge) columns.push_back({e.a + 1, e.b + 1});
  out["columns"] = std::move(columns);
  if (m.status == MembershipStatus::Outside) {
    out["certificate"] = nullptr;
    out["margin"] = nullptr;
    out["infeasibility_witness"] = m.infeasibility_witness;
  } else {
    out["certificate"] = strings(m.certificate);
    out["margin"] = to_string(m.margin);
  }
  return out;
}

nlohmann::json to_json(const ConditionReport& r) {
  nlohmann::json out;
  out["verdict"] = std::string(to_string(r.verdict));
  out["condition1"] = r.condition1;
  out["condition2A"] = r.condition2a;
  out["condition2B"] = r.condition2b;
  out["polytope_rank"] = r.polytope_rank;
  out["concentration_vector"] = strings(r.concentration);
  out["skeleton"] = to_json(r.skeleton);
  out["membership"] = to_json(r.membership, r.incidence);
  out["line_graphon"] = r.line_order.has_value();
  if (r.line_order) {
    nlohmann::json order = nlohmann::json::array();
    for (int v : *r.line_order) order.push_back(v + 1);
    out["line_order"] = std::move(order);
    out["line_inequalities"] = strings(*r.line_sums);
  }
  return out;
}

nlohmann::json to_json(const Estimate& e) {
  return {{"n", e.n},           {"trials", e.trials},   {"successes", e.successes},
          {"estimate", e.estimate}, {"ci_low", e.ci_low}, {"ci_high", e.ci_high},
          {"mean_elapsed_ms", e.mean_elapsed_ms}};
}

}  // namespace hprop
