#pragma once

#include <stdexcept>
#include <string>

namespace horizon {

/// Malformed or out-of-range input: bad probabilities, bad schedules,
/// unparseable files.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operational evidence that cannot support the requested inference: zero
/// past operation where past operation is required, or a prior that assigns
/// probability zero to the observed mishap-free run.
class EvidenceError : public std::runtime_error {
 public:
  explicit EvidenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A simulation that cannot produce a usable estimate, e.g. too few
/// conditioning survivors.
class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace horizon
