#include "horizon/schedule_io.hpp"

#include <fstream>
#include <sstream>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

double require_number(const nlohmann::json& doc, const char* field) {
  if (!doc.contains(field)) {
    throw ValidationError(std::string("schedule: missing field '") + field + "'");
  }
  const auto& v = doc.at(field);
  if (!v.is_number())
    throw ValidationError(std::string("schedule: field '") + field + "' must be a number");
  return v.get<double>();
}

}  // namespace

nlohmann::json schedule_to_json(const DeploymentSchedule& schedule) {
  nlohmann::json doc;
  doc["initial_fleet"] = schedule.initial_fleet;
  doc["op_rate"] = schedule.op_rate;
  if (schedule.retirement_age)
    doc["retirement_age"] = *schedule.retirement_age;
  else
    doc["retirement_age"] = nullptr;
  auto& segments = doc["segments"] = nlohmann::json::array();
  for (const auto& seg : schedule.segments)
    segments.push_back({{"start", seg.start}, {"rate", seg.rate}});
  return doc;
}

DeploymentSchedule schedule_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ValidationError("schedule: document must be a JSON object");
  DeploymentSchedule schedule;
  schedule.initial_fleet = require_number(doc, "initial_fleet");
  schedule.op_rate = require_number(doc, "op_rate");
  if (doc.contains("retirement_age") && !doc.at("retirement_age").is_null()) {
    if (!doc.at("retirement_age").is_number())
      throw ValidationError("schedule: field 'retirement_age' must be a number or null");
    schedule.retirement_age = doc.at("retirement_age").get<double>();
  }
  if (!doc.contains("segments") || !doc.at("segments").is_array())
    throw ValidationError("schedule: field 'segments' must be an array");
  for (const auto& item : doc.at("segments")) {
    if (!item.is_object())
      throw ValidationError("schedule: each segment must be an object with 'start' and 'rate'");
    DeploymentSchedule::Segment seg;
    seg.start = require_number(item, "start");
    seg.rate = require_number(item, "rate");
    schedule.segments.push_back(seg);
  }
  validate(schedule);
  return schedule;
}

DeploymentSchedule parse_schedule(std::string_view text, const std::string& origin) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(origin + ": " + e.what());
  }
  try {
    return schedule_from_json(doc);
  } catch (const ValidationError& e) {
    throw ValidationError(origin + ": " + e.what());
  }
}

DeploymentSchedule load_schedule(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path + ": cannot open schedule file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_schedule(buffer.str(), path);
}

std::string schedule_to_string(const DeploymentSchedule& schedule) {
  return schedule_to_json(schedule).dump(2) + "\n";
}

}  // namespace horizon
