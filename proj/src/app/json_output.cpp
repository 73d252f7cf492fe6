#include "parcov/app/json_output.hpp"

#include <algorithm>

namespace parcov::app {

json one_based(const std::optional<std::vector<int>>& indices) {
  if (!indices) return nullptr;
  json out = json::array();
  for (int i : *indices) out.push_back(i + 1);
  return out;
}

json cover_report_json(const SolveReport& report) {
  return {
      {"feasible", report.feasible},
      {"witness", one_based(report.witness)},
      {"covered", report.covered},
      {"nodes_explored", report.nodes_explored},
      {"leaf_dp_calls", report.leaf_dp_calls},
      {"time_ms", report.time_ms()},
  };
}

std::vector<int> signed_assignment(std::span<const int> true_vars, int n_vars) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n_vars));
  for (int v = 0; v < n_vars; ++v) {
    bool on = std::find(true_vars.begin(), true_vars.end(), v) != true_vars.end();
    out.push_back(on ? v + 1 : -(v + 1));
  }
  return out;
}

json sat_report_json(const SolveReport& report, int n_vars) {
  json j = cover_report_json(report);
  if (report.witness) j["witness"] = signed_assignment(*report.witness, n_vars);
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json without_timing(json j) {
  if (j.is_object()) {
    j.erase("time_ms");
    for (auto& [key, value] : j.items()) value = without_timing(value);
  } else if (j.is_array()) {
    for (auto& value : j) value = without_timing(value);
  }
  return j;
}

}  // namespace parcov::app
