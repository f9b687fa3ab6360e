#pragma once

#include <span>
#include <vector>

#include "horizon/schedule.hpp"

namespace horizon {

/// Whether the horizon computation accounts for production-rate changes that
/// have not yet taken effect at the evaluation time.
enum class Anticipation { kAware, kUnaware };

/// Confidence horizon at a point in time: the extension coefficient applied,
/// the operation accumulated so far, and the horizon in demands and in
/// calendar time (infinite when the coefficient is unbounded).
struct HorizonResult {
  double k = 0.0;
  double ops_past = 0.0;
  double ops_horizon = 0.0;
  double time_horizon = 0.0;
  Anticipation anticipation = Anticipation::kAware;
};

/// Calendar-horizon coefficient under constant-rate fleet growth:
/// sqrt(k + 1) - 1.
double k_linear(double k);

/// Solves T(t_now + h) = (k + 1) * T(t_now) for the calendar horizon h, where
/// T is the fleet's accumulated operation. Aware mode uses the full schedule;
/// Unaware mode freezes the production rate at its value just before t_now,
/// ignoring changes that take effect at or after t_now.
///
/// Brackets the root by doubling, bisects across breakpoints, and finishes
/// with the exact quadratic root once a single piece contains the crossing.
HorizonResult horizon_time(const DeploymentSchedule& schedule, double t_now,
                           double k, Anticipation anticipation);

/// Closed-form calendar horizon for production at a constant rate from t = 0
/// multiplied by `rate_factor` at `step_time`, evaluated at t >= step_time.
/// rate_factor = 2 is the doubled-production case; rate_factor = 1 recovers
/// the pure linear-growth horizon (sqrt(k+1) - 1) * t.
double horizon_closed_form_step(double t, double step_time, double k,
                                double rate_factor = 2.0);

struct ScenarioRow {
  double t = 0.0;
  double fleet = 0.0;
  double ops_past = 0.0;
  double time_horizon = 0.0;  // +inf when unbounded, NaN when invalid
  double ratio = 0.0;         // time_horizon / t
  bool valid = true;
};

/// Time series of fleet size, accumulated operation, and horizon over a time
/// grid; rows where the horizon is undefined (no past operation yet) are
/// marked invalid and the trace continues.
struct ScenarioTrace {
  std::vector<ScenarioRow> rows;
};

ScenarioTrace scenario_trace(const DeploymentSchedule& schedule, double k,
                             std::span<const double> t_grid,
                             Anticipation anticipation);

/// The schedule as known to an observer at t_now who extrapolates the current
/// production rate: segments starting at or after t_now are dropped.
DeploymentSchedule freeze_at(const DeploymentSchedule& schedule, double t_now);

}  // namespace horizon
