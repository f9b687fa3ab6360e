#include "horizon/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

// Production rate in effect at time t (right-continuous), 0 before t = 0.
double rate_at(const DeploymentSchedule& s, double t) {
  if (t < 0.0) return 0.0;
  double rate = 0.0;
  for (const auto& seg : s.segments) {
    if (seg.start > t) break;
    rate = seg.rate;
  }
  return rate;
}

// Vehicles produced by the segments (excluding the initial fleet) over [0, t].
double produced(const DeploymentSchedule& s, double t) {
  if (t <= 0.0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < s.segments.size(); ++i) {
    const double seg_start = s.segments[i].start;
    if (seg_start >= t) break;
    const double seg_end =
        i + 1 < s.segments.size() ? std::min(s.segments[i + 1].start, t) : t;
    total += s.segments[i].rate * (seg_end - seg_start);
  }
  return total;
}

}  // namespace

void validate(const DeploymentSchedule& schedule) {
  if (!std::isfinite(schedule.initial_fleet) || schedule.initial_fleet < 0.0)
    throw ValidationError("initial_fleet must be a finite nonnegative count");
  if (!std::isfinite(schedule.op_rate) || schedule.op_rate <= 0.0)
    throw ValidationError("op_rate must be a finite positive rate");
  if (schedule.retirement_age &&
      (!std::isfinite(*schedule.retirement_age) || *schedule.retirement_age <= 0.0))
    throw ValidationError("retirement_age must be a finite positive duration");
  if (schedule.segments.empty())
    throw ValidationError("schedule needs at least one production segment");
  if (schedule.segments.front().start != 0.0)
    throw ValidationError("first production segment must start at t = 0");
  for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
    const auto& seg = schedule.segments[i];
    if (!std::isfinite(seg.start) || !std::isfinite(seg.rate) || seg.rate < 0.0)
      throw ValidationError("production segments need finite start and nonnegative rate");
    if (i > 0 && seg.start <= schedule.segments[i - 1].start)
      throw ValidationError("production segment starts must strictly increase");
  }
}

OperationProfile::OperationProfile(const DeploymentSchedule& schedule)
    : op_rate_(schedule.op_rate) {
  validate(schedule);

  breakpoints_.push_back(0.0);
  for (const auto& seg : schedule.segments) breakpoints_.push_back(seg.start);
  if (schedule.retirement_age) {
    const double life = *schedule.retirement_age;
    breakpoints_.push_back(life);
    for (const auto& seg : schedule.segments)
      breakpoints_.push_back(seg.start + life);
  }
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()),
                     breakpoints_.end());

  pieces_.reserve(breakpoints_.size());
  double ops = 0.0;
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    const double b = breakpoints_[j];
    Piece piece;
    piece.start = b;
    // Rates are looked up at the piece midpoint: a breakpoint of the form
    // s + life lands one ulp off s when shifted back by life, which would
    // read the wrong segment at the boundary.
    const double probe = j + 1 < breakpoints_.size()
                             ? b + 0.5 * (breakpoints_[j + 1] - b)
                             : b + std::max(1.0, std::abs(b));
    if (schedule.retirement_age) {
      const double life = *schedule.retirement_age;
      piece.fleet = (b < life ? schedule.initial_fleet : 0.0) +
                    produced(schedule, b) - produced(schedule, b - life);
      piece.slope = rate_at(schedule, probe) - rate_at(schedule, probe - life);
    } else {
      piece.fleet = schedule.initial_fleet + produced(schedule, b);
      piece.slope = rate_at(schedule, probe);
    }
    piece.ops = ops;
    pieces_.push_back(piece);
    if (j + 1 < breakpoints_.size()) {
      const double dt = breakpoints_[j + 1] - b;
      ops += op_rate_ * (piece.fleet * dt + 0.5 * piece.slope * dt * dt);
    }
  }

  // Beyond the last breakpoint production and retirement rates have settled,
  // so the fleet is constant there; operation saturates only if it is empty.
  const Piece& last = pieces_.back();
  limit_ = (last.fleet == 0.0 && last.slope == 0.0)
               ? last.ops
               : std::numeric_limits<double>::infinity();
}

const OperationProfile::Piece& OperationProfile::piece_at(double t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto idx = static_cast<std::size_t>(
      std::max<std::ptrdiff_t>(0, (it - breakpoints_.begin()) - 1));
  return pieces_[idx];
}

double OperationProfile::fleet(double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw ValidationError("fleet_size requires a finite time t >= 0");
  const Piece& p = piece_at(t);
  return p.fleet + p.slope * (t - p.start);
}

double OperationProfile::operation(double t) const {
  if (!std::isfinite(t) || t < 0.0)
    throw ValidationError("cumulative_operation requires a finite time t >= 0");
  const Piece& p = piece_at(t);
  const double dt = t - p.start;
  return p.ops + op_rate_ * (p.fleet * dt + 0.5 * p.slope * dt * dt);
}

double OperationProfile::solve_within_piece(double target, double anchor) const {
  const Piece& p = piece_at(anchor);
  const double rhs = (target - operation(anchor)) / op_rate_;
  if (rhs <= 0.0) return anchor;
  const double fleet_here = p.fleet + p.slope * (anchor - p.start);
  // Smallest h >= 0 with (slope/2) h^2 + fleet h = rhs. Both slope signs
  // share the cancellation-free form 2 rhs / (fleet + sqrt(disc)).
  const double a = 0.5 * p.slope;
  if (a == 0.0) return anchor + rhs / fleet_here;
  const double disc = std::max(fleet_here * fleet_here + 4.0 * a * rhs, 0.0);
  return anchor + 2.0 * rhs / (fleet_here + std::sqrt(disc));
}

double fleet_size(const DeploymentSchedule& schedule, double t) {
  return OperationProfile(schedule).fleet(t);
}

double cumulative_operation(const DeploymentSchedule& schedule, double t) {
  return OperationProfile(schedule).operation(t);
}

}  // namespace horizon
