#pragma once

#include <filesystem>
#include <span>

#include <json.hpp>

#include "hprop/conditions.hpp"
#include "hprop/graphon.hpp"
#include "hprop/hamdec.hpp"
#include "hprop/montecarlo.hpp"

namespace hprop {

/// {"partition": ["0", "1/5", ...], "values": [["0", "1/2", ...], ...]}.
/// Entries must be strings ("p/q", integer or finite decimal); JSON numbers
/// are rejected since they are not exact. Throws Error.
StepGraphon graphon_from_json(const nlohmann::json& doc);
nlohmann::json graphon_to_json(const StepGraphon& g);

StepGraphon read_graphon_file(const std::filesystem::path& path);

nlohmann::json to_json(const SkeletonGraph& s);
nlohmann::json to_json(const MembershipResult& m, const IncidenceMatrix& z);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const Estimate& e);

}  // namespace hprop
