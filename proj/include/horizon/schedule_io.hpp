#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "horizon/schedule.hpp"

namespace horizon {

/// Schedule document layout:
///   {
///     "initial_fleet": 0.0,
///     "op_rate": 1.0,
///     "retirement_age": null,
///     "segments": [ {"start": 0.0, "rate": 1.0}, ... ]
///   }
/// Reals round-trip bit-exactly through the emitted decimal strings.
nlohmann::json schedule_to_json(const DeploymentSchedule& schedule);
DeploymentSchedule schedule_from_json(const nlohmann::json& doc);

/// Parses a schedule document; `origin` names the source (file name, "<inline>")
/// in diagnostics. Throws ValidationError with line/field information.
DeploymentSchedule parse_schedule(std::string_view text, const std::string& origin);

/// Reads and parses a schedule file.
DeploymentSchedule load_schedule(const std::string& path);

/// Serialises with indentation, suitable for writing back to a file.
std::string schedule_to_string(const DeploymentSchedule& schedule);

}  // namespace horizon
