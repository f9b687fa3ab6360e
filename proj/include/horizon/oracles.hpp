#pragma once

#include <cstdint>

#include "horizon/prior.hpp"

namespace horizon {

/// Deterministic Monte Carlo setup for conditional-survival estimation.
///
/// Randomness contract: samples are processed in chunks of 65536; chunk c
/// uses an mt19937_64 engine seeded with splitmix64(seed + c + 1), and
/// uniform deviates are (engine() >> 11) * 2^-53. The estimate is therefore a
/// pure function of (seed, n_samples, prior, t_past, t_fut), independent of
/// how chunks are scheduled.
struct SimulationConfig {
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  double t_past = 0.0;  ///< integer-valued demand count
  double t_fut = 0.0;   ///< integer-valued demand count
  PfdPrior prior;
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t survivors_past = 0;
};

/// Brute-force worst-case search over gridded atom placements, independent of
/// the analytic minimiser. PfdZero: two-atom priors {(0, p), (q, 1-p)} with q
/// on `grid_size` points uniform in x = (1-q)^t_past over [0, 1). PfdBounded:
/// two-atom priors {(q1, p), (q2, 1-p)} with q1 on min(grid_size, 129)
/// uniform points of [0, q_bound] and q2 gridded like the PfdZero case over
/// (q_bound, 1]. Returns the grid minimum of the posterior reliability, an
/// upper bound on the true infimum.
double atom_grid_worst_case(const KnowledgeConstraint& constraint,
                            double t_past, double t_fut, int grid_size);

/// Samples a pfd from the prior, conditions on surviving t_past demands, and
/// estimates survival over t_fut more, with its binomial standard error.
/// Survival of T demands is drawn in one shot with probability (1-q)^T, which
/// is distributed identically to demand-by-demand trials. Throws
/// SimulationError when fewer than 100 conditioning survivors are expected.
MonteCarloEstimate monte_carlo_conditional_survival(const SimulationConfig& config);

}  // namespace horizon
