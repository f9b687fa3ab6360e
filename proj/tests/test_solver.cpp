#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "horizon/errors.hpp"
#include "horizon/inference.hpp"
#include "horizon/solver.hpp"

using namespace horizon;

namespace {

DeploymentSchedule linear(double rate, double op_rate = 1.0) {
  DeploymentSchedule s;
  s.segments = {{0.0, rate}};
  s.op_rate = op_rate;
  return s;
}

DeploymentSchedule stepped(double rate, double step_time, double factor) {
  DeploymentSchedule s = linear(rate);
  s.segments.push_back({step_time, rate * factor});
  return s;
}

}  // namespace

TEST_CASE("k_linear") {
  CHECK(k_linear(5.0) == std::sqrt(6.0) - 1.0);
  CHECK(k_linear(0.0) == 0.0);
  CHECK(k_linear(10.0) == doctest::Approx(2.3166247903554).epsilon(1e-12));
  CHECK(k_linear(0.2) == doctest::Approx(0.0954451150103).epsilon(1e-10));
  CHECK_THROWS_AS(k_linear(-0.1), ValidationError);
}

TEST_CASE("pure linear growth matches the closed-form coefficient") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double rate = 0.1 + 10.0 * unit(rng);
    const double op = 0.1 + 10.0 * unit(rng);
    const double k = 0.05 + 20.0 * unit(rng);
    const double t = 0.5 + 100.0 * unit(rng);
    const HorizonResult res =
        horizon_time(linear(rate, op), t, k, Anticipation::kAware);
    const double expected = (std::sqrt(k + 1.0) - 1.0) * t;
    CHECK(std::abs(res.time_horizon - expected) <= 1e-8 * t);
    CHECK(res.ops_past == doctest::Approx(rate * op * t * t / 2.0).epsilon(1e-12));
    CHECK(res.ops_horizon == doctest::Approx(k * res.ops_past).epsilon(1e-12));
  }
}

TEST_CASE("doubled production anchors") {
  const DeploymentSchedule s = stepped(1.0, 5.0, 2.0);
  const double aware = horizon_time(s, 5.0, 5.0, Anticipation::kAware).time_horizon;
  CHECK(aware == doctest::Approx((-10.0 + std::sqrt(1100.0)) / 4.0).epsilon(1e-12));
  CHECK(aware == doctest::Approx(5.79).epsilon(2e-3));

  const double unaware =
      horizon_time(s, 5.0, 5.0, Anticipation::kUnaware).time_horizon;
  CHECK(unaware == doctest::Approx((std::sqrt(6.0) - 1.0) * 5.0).epsilon(1e-12));
  CHECK(unaware == doctest::Approx(7.246).epsilon(1e-3));
}

TEST_CASE("closed form for a production step") {
  // Doubling: the solver and the closed form agree tightly across times.
  const DeploymentSchedule s = stepped(1.0, 5.0, 2.0);
  for (double t = 5.0; t <= 50.0; t += 0.25) {
    const double solver = horizon_time(s, t, 5.0, Anticipation::kAware).time_horizon;
    const double closed = horizon_closed_form_step(t, 5.0, 5.0, 2.0);
    CHECK(std::abs(solver - closed) <= 1e-9);
  }

  // Four-fold increase at the step time, against the solver.
  const double fourfold = horizon_closed_form_step(5.0, 5.0, 5.0, 4.0);
  CHECK(fourfold == doctest::Approx((-10.0 + std::sqrt(2100.0)) / 8.0).epsilon(1e-12));
  const DeploymentSchedule s4 = stepped(1.0, 5.0, 4.0);
  CHECK(horizon_time(s4, 5.0, 5.0, Anticipation::kAware).time_horizon ==
        doctest::Approx(fourfold).epsilon(1e-10));

  // Factor one degenerates to pure linear growth.
  CHECK(horizon_closed_form_step(7.0, 5.0, 5.0, 1.0) ==
        doctest::Approx((std::sqrt(6.0) - 1.0) * 7.0).epsilon(1e-12));

  // The step is forgotten in the long run.
  const double far = 1e6;
  CHECK(horizon_closed_form_step(far, 5.0, 5.0, 2.0) / far ==
        doctest::Approx(std::sqrt(6.0) - 1.0).epsilon(1e-5));

  CHECK_THROWS_AS(horizon_closed_form_step(4.0, 5.0, 5.0, 2.0), ValidationError);
}

TEST_CASE("constant fleet horizon is k times elapsed time") {
  DeploymentSchedule s;
  s.initial_fleet = 12.0;
  s.segments = {{0.0, 0.0}};
  s.op_rate = 3.0;
  for (double t : {0.5, 2.0, 40.0}) {
    const HorizonResult res = horizon_time(s, t, 5.0, Anticipation::kAware);
    CHECK(res.time_horizon == doctest::Approx(5.0 * t).epsilon(1e-12));
  }
}

TEST_CASE("anticipation ordering and early dip") {
  const DeploymentSchedule s = stepped(1.0, 5.0, 2.0);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double t = 0.5 + 4.4 * unit(rng);  // before the step
    const double aware = horizon_time(s, t, 5.0, Anticipation::kAware).time_horizon;
    const double unaware =
        horizon_time(s, t, 5.0, Anticipation::kUnaware).time_horizon;
    CHECK(aware <= unaware + 1e-12);
  }
  // The dip is already visible before the step takes effect.
  const double aware4 = horizon_time(s, 4.0, 5.0, Anticipation::kAware).time_horizon;
  CHECK(aware4 < (std::sqrt(6.0) - 1.0) * 4.0 - 1e-6);
}

TEST_CASE("monotone recovery after a step increase") {
  const DeploymentSchedule s = stepped(1.0, 5.0, 4.0);
  double prev = 0.0;
  for (double t = 5.0; t <= 60.0; t += 0.5) {
    const double th = horizon_time(s, t, 5.0, Anticipation::kAware).time_horizon;
    CHECK(th >= prev - 1e-10);
    prev = th;
  }
}

TEST_CASE("retirement equilibrium restores the full coefficient") {
  DeploymentSchedule s = linear(1.0);
  s.retirement_age = 5.0;
  const double k = 5.0;
  const double t = 100.0 * 5.0;
  const HorizonResult res = horizon_time(s, t, k, Anticipation::kAware);
  CHECK(std::abs(res.time_horizon / t - k) / k < 0.02);

  // And from below: at the retirement onset the coefficient is still near
  // the linear-growth value.
  const HorizonResult early = horizon_time(s, 5.0, k, Anticipation::kAware);
  CHECK(early.time_horizon / 5.0 < k);
}

TEST_CASE("horizons beyond a fleet that drains away are unbounded") {
  DeploymentSchedule s;
  s.segments = {{0.0, 1.0}, {1.0, 0.0}};  // one unit of production, then stop
  s.op_rate = 1.0;
  s.retirement_age = 1.0;
  // Total lifetime operation: 1 vehicle-unit times 1 life-unit.
  const OperationProfile profile(s);
  CHECK(profile.operation_limit() == doctest::Approx(1.0).epsilon(1e-12));

  const HorizonResult finite = horizon_time(s, 0.5, 7.0, Anticipation::kAware);
  CHECK(finite.time_horizon == doctest::Approx(1.5).epsilon(1e-9));

  const HorizonResult infinite = horizon_time(s, 0.5, 8.0, Anticipation::kAware);
  CHECK(is_unbounded(infinite.time_horizon));
  CHECK(!is_unbounded(infinite.ops_horizon));
}

TEST_CASE("unbounded coefficient propagates") {
  const HorizonResult res =
      horizon_time(linear(1.0), 3.0, unbounded(), Anticipation::kAware);
  CHECK(is_unbounded(res.time_horizon));
  CHECK(is_unbounded(res.ops_horizon));
  CHECK(res.ops_past == doctest::Approx(4.5));
}

TEST_CASE("zero coefficient gives zero horizon") {
  const HorizonResult res = horizon_time(linear(1.0), 3.0, 0.0, Anticipation::kAware);
  CHECK(res.time_horizon == 0.0);
}

TEST_CASE("horizon_time validation") {
  CHECK_THROWS_AS(horizon_time(linear(1.0), 0.0, 5.0, Anticipation::kAware),
                  ValidationError);
  CHECK_THROWS_AS(horizon_time(linear(1.0), 1.0, -1.0, Anticipation::kAware),
                  ValidationError);
  DeploymentSchedule delayed;
  delayed.segments = {{0.0, 0.0}, {2.0, 1.0}};
  CHECK_THROWS_AS(horizon_time(delayed, 1.0, 5.0, Anticipation::kAware),
                  EvidenceError);
}

TEST_CASE("freeze_at keeps only rates already in effect") {
  const DeploymentSchedule s = stepped(1.0, 5.0, 2.0);
  const DeploymentSchedule at5 = freeze_at(s, 5.0);
  REQUIRE(at5.segments.size() == 1);
  CHECK(at5.segments[0].rate == 1.0);
  const DeploymentSchedule at6 = freeze_at(s, 6.0);
  REQUIRE(at6.segments.size() == 2);
  CHECK(at6.segments[1].rate == 2.0);
}

TEST_CASE("scenario trace") {
  std::vector<double> grid;
  for (double t = 1.0; t <= 20.0; t += 1.0) grid.push_back(t);

  // Pure linear growth: constant ratio.
  const ScenarioTrace flat = scenario_trace(linear(2.0), 5.0, grid,
                                            Anticipation::kAware);
  REQUIRE(flat.rows.size() == grid.size());
  for (const auto& row : flat.rows) {
    CHECK(row.valid);
    CHECK(row.ratio == doctest::Approx(std::sqrt(6.0) - 1.0).epsilon(1e-9));
  }

  // Four-fold step: dip at the step, then recovery toward the linear value.
  const ScenarioTrace dip = scenario_trace(stepped(1.0, 5.0, 4.0), 5.0, grid,
                                           Anticipation::kAware);
  CHECK(dip.rows[4].ratio ==
        doctest::Approx((-10.0 + std::sqrt(2100.0)) / 8.0 / 5.0).epsilon(1e-9));
  CHECK(dip.rows[19].ratio > dip.rows[4].ratio);

  // Constant fleet: ratio equals the coefficient itself.
  DeploymentSchedule constant_fleet;
  constant_fleet.initial_fleet = 4.0;
  constant_fleet.segments = {{0.0, 0.0}};
  const ScenarioTrace fixed =
      scenario_trace(constant_fleet, 5.0, grid, Anticipation::kAware);
  for (const auto& row : fixed.rows)
    CHECK(row.ratio == doctest::Approx(5.0).epsilon(1e-12));

  // Rows before any operation exists are marked invalid, the rest continue.
  DeploymentSchedule delayed;
  delayed.segments = {{0.0, 0.0}, {2.0, 1.0}};
  const ScenarioTrace mixed =
      scenario_trace(delayed, 5.0, grid, Anticipation::kAware);
  CHECK_FALSE(mixed.rows[0].valid);
  CHECK(std::isnan(mixed.rows[0].time_horizon));
  CHECK(mixed.rows[5].valid);

  // Grid validation.
  const std::vector<double> bad = {2.0, 1.0};
  CHECK_THROWS_AS(scenario_trace(linear(1.0), 5.0, bad, Anticipation::kAware),
                  ValidationError);
}
