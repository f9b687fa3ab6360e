#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "horizon/prior.hpp"
#include "horizon/schedule.hpp"
#include "horizon/solver.hpp"

namespace horizon::cli {

/// 6 significant digits in human mode, 17 in full-precision mode.
struct OutputOptions {
  int sig_digits = 6;
};

struct BoundArgs {
  KnowledgeConstraint constraint;
  double t_past = 0.0;
  double t_fut = 0.0;
  OutputOptions out;
};

/// Worst-case posterior bound, its minimising pfd, and the mishap probability.
void cmd_bound(const BoundArgs& args, std::ostream& os);

struct Figure1Args {
  std::vector<double> p_zero_values;
  double rho_start = 0.0;
  double rho_stop = 10.0;
  double rho_step = 0.1;
  OutputOptions out;
};

/// CSV `pp,ratio,mishap_prob`: worst-case mishap probability over a grid of
/// horizon ratios, one block per fault-freeness probability.
void cmd_figure1(const Figure1Args& args, std::ostream& os);

struct Table1Args {
  double confidence = 0.95;
  OutputOptions out;
};

/// CSV `pp,k,k_linear` for the reference fault-freeness probabilities
/// {0.92, 0.82, 0.72, 0.5, 0.1}.
void cmd_table1(const Table1Args& args, std::ostream& os);

struct ScenarioArgs {
  DeploymentSchedule schedule;
  std::optional<double> k;  // either a fixed coefficient ...
  std::optional<KnowledgeConstraint> constraint;  // ... or derive it per row
  double confidence = 0.95;
  double t_start = 0.0;
  double t_stop = 0.0;
  double t_step = 0.0;
  Anticipation anticipation = Anticipation::kAware;
  OutputOptions out;
};

/// CSV `t,fleet,T_past,t_hor,ratio` over the requested time grid; unbounded
/// horizons render as `inf`, undefined rows as `nan`.
void cmd_scenario(const ScenarioArgs& args, std::ostream& os);

struct ValidateArgs {
  KnowledgeConstraint constraint;
  double t_past = 0.0;
  double t_fut = 0.0;
  int grid_size = 10000;
  std::uint64_t mc_samples = 1000000;
  std::uint64_t seed = 1;
  OutputOptions out;
};

/// Cross-checks the analytic bound against the grid oracle and a Monte Carlo
/// run on the minimising prior; returns false when any check fails.
bool cmd_validate(const ValidateArgs& args, std::ostream& os);

}  // namespace horizon::cli
