#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace slepian::cli {

using Json = nlohmann::ordered_json;

struct RunReport {
  std::string command;
  std::string version;
  Json parameters = Json::object();
  Json shannon = Json::object();
  std::vector<double> eigenvalues;
  /// One object per eigenvalue, same order.
  Json entries = Json::array();
  Json diagnostics = Json::object();
  /// Command-specific tables (per-order sums, mask counts, exported files).
  Json extra = Json::object();

  bool operator==(const RunReport&) const = default;
};

Json to_json(const RunReport& r);
RunReport from_json(const Json& j);

/// Pretty-printed; doubles use the shortest form that reads back exactly.
std::string serialize(const RunReport& r);
RunReport parse_report(const std::string& text);

}  // namespace slepian::cli
