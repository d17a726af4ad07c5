#include "report.hpp"

namespace slepian::cli {

Json to_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["version"] = r.version;
  j["parameters"] = r.parameters;
  j["shannon"] = r.shannon;
  j["eigenvalues"] = r.eigenvalues;
  j["entries"] = r.entries;
  j["diagnostics"] = r.diagnostics;
  j["extra"] = r.extra;
  return j;
}

RunReport from_json(const Json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.parameters = j.at("parameters");
  r.shannon = j.at("shannon");
  r.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  r.entries = j.at("entries");
  r.diagnostics = j.at("diagnostics");
  r.extra = j.value("extra", Json::object());
  return r;
}

std::string serialize(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

RunReport parse_report(const std::string& text) { return from_json(Json::parse(text)); }

}  // namespace slepian::cli
