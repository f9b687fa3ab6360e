#pragma once

#include <optional>
#include <span>
#include <vector>

namespace horizon {

/// Fleet deployment plan: piecewise-constant vehicle production, a shared
/// per-vehicle operation rate, and an optional fixed service life. Vehicle
/// counts are continuous (fluid approximation).
struct DeploymentSchedule {
  struct Segment {
    double start = 0.0;  ///< calendar time at which the rate takes effect
    double rate = 0.0;   ///< vehicles produced per unit time
  };

  /// Vehicles already in service at t = 0, treated as produced at t = 0.
  double initial_fleet = 0.0;
  /// Production segments; the first must start at 0, starts strictly increase.
  std::vector<Segment> segments;
  /// Demands per vehicle per unit time.
  double op_rate = 1.0;
  /// Service life: a vehicle produced at time tau leaves the fleet at
  /// tau + retirement_age. Absent means never retired.
  std::optional<double> retirement_age;
};

/// Throws ValidationError if the schedule violates its invariants.
void validate(const DeploymentSchedule& schedule);

/// Piecewise-quadratic closed form of the fleet's accumulated operation,
/// precomputed once per schedule. Fleet size is piecewise linear between
/// breakpoints (production-rate changes and their retirement echoes);
/// accumulated operation integrates it exactly segment by segment.
class OperationProfile {
 public:
  explicit OperationProfile(const DeploymentSchedule& schedule);

  /// Vehicles in service at time t >= 0 (right-continuous at jumps).
  double fleet(double t) const;

  /// Total demands accumulated by the fleet over [0, t].
  double operation(double t) const;

  /// Limit of operation(t) as t grows; +inf unless the fleet drains to zero
  /// for good.
  double operation_limit() const { return limit_; }

  /// Times at which the fleet-size slope (or value) changes.
  std::span<const double> breakpoints() const { return breakpoints_; }

  /// Exact root of operation(u) = target within the piece containing
  /// `anchor`; callers must ensure the root lies in that piece and that
  /// target >= operation(anchor).
  double solve_within_piece(double target, double anchor) const;

 private:
  struct Piece {
    double start = 0.0;
    double fleet = 0.0;  // fleet just after `start`
    double slope = 0.0;  // d fleet / dt inside the piece
    double ops = 0.0;    // accumulated operation at `start`
  };

  const Piece& piece_at(double t) const;

  std::vector<double> breakpoints_;
  std::vector<Piece> pieces_;
  double op_rate_ = 1.0;
  double limit_ = 0.0;
};

/// Vehicles in service at time t.
double fleet_size(const DeploymentSchedule& schedule, double t);

/// Total demands accumulated by the whole fleet over [0, t]; continuous and
/// non-decreasing in t.
double cumulative_operation(const DeploymentSchedule& schedule, double t);

}  // namespace horizon
