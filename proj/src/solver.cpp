#include "horizon/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "horizon/errors.hpp"
#include "horizon/inference.hpp"

namespace horizon {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

bool has_breakpoint_inside(std::span<const double> breakpoints, double lo,
                           double hi) {
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), lo);
  return it != breakpoints.end() && *it < hi;
}

}  // namespace

double k_linear(double k) {
  if (!std::isfinite(k) || k < 0.0)
    throw ValidationError("extension coefficient must be finite and >= 0");
  return std::sqrt(k + 1.0) - 1.0;
}

DeploymentSchedule freeze_at(const DeploymentSchedule& schedule, double t_now) {
  DeploymentSchedule frozen = schedule;
  std::erase_if(frozen.segments, [t_now](const DeploymentSchedule::Segment& s) {
    return s.start >= t_now;
  });
  if (frozen.segments.empty()) frozen.segments.push_back({0.0, 0.0});
  return frozen;
}

HorizonResult horizon_time(const DeploymentSchedule& schedule, double t_now,
                           double k, Anticipation anticipation) {
  if (!std::isfinite(t_now) || t_now <= 0.0)
    throw ValidationError("horizon evaluation time must be positive");
  if (std::isnan(k) || k < 0.0)
    throw ValidationError("extension coefficient must be >= 0");

  const DeploymentSchedule effective =
      anticipation == Anticipation::kUnaware ? freeze_at(schedule, t_now)
                                             : schedule;
  const OperationProfile profile(effective);

  HorizonResult result;
  result.k = k;
  result.anticipation = anticipation;
  result.ops_past = profile.operation(t_now);
  if (result.ops_past <= 0.0)
    throw EvidenceError("no operation accumulated by t_now; horizon undefined");

  if (is_unbounded(k)) {
    result.ops_horizon = unbounded();
    result.time_horizon = unbounded();
    return result;
  }
  result.ops_horizon = k * result.ops_past;

  const double target = (k + 1.0) * result.ops_past;
  if (target <= result.ops_past) {
    result.time_horizon = 0.0;
    return result;
  }
  if (profile.operation_limit() < target) {
    result.time_horizon = unbounded();
    return result;
  }

  // Bracket the crossing by doubling.
  double lo = 0.0;
  double hi = std::max(t_now * 1e-6, 1e-6);
  while (profile.operation(t_now + hi) < target) {
    lo = hi;
    hi *= 2.0;
  }

  // Bisect until no breakpoint separates the bracket ends.
  const double tol = 1e-9 * std::max(1.0, t_now);
  for (int i = 0; i < 200 &&
                  has_breakpoint_inside(profile.breakpoints(), t_now + lo,
                                        t_now + hi) &&
                  hi - lo > tol;
       ++i) {
    const double mid = 0.5 * (lo + hi);
    if (profile.operation(t_now + mid) < target)
      lo = mid;
    else
      hi = mid;
  }

  if (has_breakpoint_inside(profile.breakpoints(), t_now + lo, t_now + hi)) {
    // Root sits on a breakpoint; the bracket has collapsed to tolerance.
    result.time_horizon = 0.5 * (lo + hi);
    return result;
  }

  result.time_horizon =
      profile.solve_within_piece(target, t_now + lo) - t_now;
  return result;
}

double horizon_closed_form_step(double t, double step_time, double k,
                                double rate_factor) {
  if (!std::isfinite(t) || !std::isfinite(step_time) || step_time <= 0.0 ||
      t < step_time)
    throw ValidationError("closed form requires t >= step_time > 0");
  if (!std::isfinite(k) || k < 0.0)
    throw ValidationError("extension coefficient must be finite and >= 0");
  if (!std::isfinite(rate_factor) || rate_factor <= 0.0)
    throw ValidationError("rate factor must be positive");

  // With production rate 1 on [0, s) and m from s on, accumulated operation
  // is 2 T(t) = m t^2 - 2(m-1) s t + (m-1) s^2 for t >= s. The horizon end u
  // solves m u^2 - 2(m-1) s u + (m-1) s^2 = 2 (k+1) T(t).
  const double m = rate_factor;
  const double s = step_time;
  const double two_T = m * t * t - 2.0 * (m - 1.0) * s * t + (m - 1.0) * s * s;
  const double disc = (m - 1.0) * (m - 1.0) * s * s +
                      m * ((k + 1.0) * two_T - (m - 1.0) * s * s);
  if (disc < 0.0)
    throw std::logic_error("closed-form horizon discriminant negative");
  const double u = ((m - 1.0) * s + std::sqrt(disc)) / m;
  return u - t;
}

ScenarioTrace scenario_trace(const DeploymentSchedule& schedule, double k,
                             std::span<const double> t_grid,
                             Anticipation anticipation) {
  validate(schedule);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw ValidationError("trace grid times must be positive");
    if (i > 0 && t_grid[i] <= t_grid[i - 1])
      throw ValidationError("trace grid times must strictly increase");
  }

  const OperationProfile profile(schedule);
  ScenarioTrace trace;
  trace.rows.reserve(t_grid.size());
  for (const double t : t_grid) {
    ScenarioRow row;
    row.t = t;
    row.fleet = profile.fleet(t);
    row.ops_past = profile.operation(t);
    try {
      const HorizonResult res = horizon_time(schedule, t, k, anticipation);
      row.time_horizon = res.time_horizon;
      row.ratio = res.time_horizon / t;
    } catch (const EvidenceError&) {
      row.time_horizon = kNan;
      row.ratio = kNan;
      row.valid = false;
    }
    trace.rows.push_back(row);
  }
  return trace;
}

}  // namespace horizon
