#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "parcov/report.hpp"

namespace parcov::app {

using nlohmann::json;

// 0-based indices -> 1-based list; nullopt -> null.
json one_based(const std::optional<std::vector<int>>& indices);

// {feasible, witness (1-based), covered, nodes_explored, leaf_dp_calls, time_ms}
json cover_report_json(const SolveReport& report);

// As cover_report_json, witness as the signed 1-based value of every variable.
json sat_report_json(const SolveReport& report, int n_vars);

std::vector<int> signed_assignment(std::span<const int> true_vars, int n_vars);

// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);

// Copy without any "time_ms" member, at any depth.
json without_timing(json j);

}  // namespace parcov::app
