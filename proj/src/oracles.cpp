#include "horizon/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

constexpr std::uint64_t kChunkSize = 65536;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

// The oracle keeps its own power evaluation so the checks do not share code
// with the inference path.
double pow_survival(double q, double t) {
  if (t == 0.0 || q == 0.0) return 1.0;
  if (q >= 1.0) return 0.0;
  return std::exp(t * std::log1p(-q));
}

double two_atom_posterior(double w1, double s1_past, double s1_both,
                          double w2, double s2_past, double s2_both) {
  const double den = w1 * s1_past + w2 * s2_past;
  if (den <= 0.0) return std::numeric_limits<double>::infinity();  // inadmissible
  return (w1 * s1_both + w2 * s2_both) / den;
}

void require_integer_count(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0 || std::floor(t) != t || t > 0x1p53)
    throw ValidationError(std::string(what) +
                          " must be an integer-valued demand count for simulation");
}

}  // namespace

double atom_grid_worst_case(const KnowledgeConstraint& constraint,
                            double t_past, double t_fut, int grid_size) {
  validate(constraint);
  if (grid_size < 3) throw ValidationError("grid_size must be at least 3");
  if (!std::isfinite(t_past) || t_past <= 0.0)
    throw EvidenceError("grid worst case needs past operation");
  if (!std::isfinite(t_fut) || t_fut < 0.0)
    throw ValidationError("t_fut must be nonnegative");

  const double rho = t_fut / t_past;
  double best = 1.0;

  if (const auto* z = std::get_if<PfdZero>(&constraint)) {
    const double p = z->p;
    // x_j = j / grid_size covers q in (0, 1] at resolution 1/grid_size.
    for (int j = 0; j < grid_size; ++j) {
      const double x = static_cast<double>(j) / grid_size;
      const double val =
          two_atom_posterior(p, 1.0, 1.0, 1.0 - p, x, std::pow(x, 1.0 + rho));
      best = std::min(best, val);
    }
    return best;
  }

  const auto& b = std::get<PfdBounded>(constraint);
  const int q1_points = std::min(grid_size, 129);
  const double cap = pow_survival(b.q_bound, t_past);
  for (int i = 0; i < q1_points; ++i) {
    const double q1 = b.q_bound * static_cast<double>(i) / (q1_points - 1);
    const double s1_past = pow_survival(q1, t_past);
    const double s1_both = pow_survival(q1, t_past + t_fut);
    for (int j = 0; j < grid_size; ++j) {
      const double x2 = cap * static_cast<double>(j) / grid_size;
      const double val = two_atom_posterior(b.p, s1_past, s1_both, 1.0 - b.p,
                                            x2, std::pow(x2, 1.0 + rho));
      best = std::min(best, val);
    }
  }
  return best;
}

MonteCarloEstimate monte_carlo_conditional_survival(const SimulationConfig& config) {
  if (config.n_samples < 1)
    throw ValidationError("simulation needs at least one sample");
  require_integer_count(config.t_past, "t_past");
  require_integer_count(config.t_fut, "t_fut");

  const auto atoms = config.prior.atoms();
  std::vector<double> cumulative_weight;
  std::vector<double> survive_past;
  std::vector<double> survive_fut;
  cumulative_weight.reserve(atoms.size());
  double cum = 0.0;
  double expected_survival = 0.0;
  for (const PfdAtom& a : atoms) {
    cum += a.weight;
    cumulative_weight.push_back(cum);
    survive_past.push_back(pow_survival(a.pfd, config.t_past));
    survive_fut.push_back(pow_survival(a.pfd, config.t_fut));
    expected_survival += a.weight * survive_past.back();
  }
  cumulative_weight.back() = 1.0;

  if (expected_survival * static_cast<double>(config.n_samples) < 100.0)
    throw SimulationError(
        "expected fewer than 100 conditioning survivors; enlarge n_samples or "
        "shorten t_past");

  std::uint64_t survivors = 0;
  std::uint64_t joint = 0;
  const std::uint64_t chunks = (config.n_samples + kChunkSize - 1) / kChunkSize;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::mt19937_64 engine(splitmix64(config.seed + c + 1));
    const std::uint64_t begin = c * kChunkSize;
    const std::uint64_t end = std::min(begin + kChunkSize, config.n_samples);
    for (std::uint64_t s = begin; s < end; ++s) {
      const double u = uniform01(engine);
      const auto it = std::lower_bound(cumulative_weight.begin(),
                                       cumulative_weight.end(), u);
      const auto idx = static_cast<std::size_t>(
          std::min<std::ptrdiff_t>(it - cumulative_weight.begin(),
                                   static_cast<std::ptrdiff_t>(atoms.size()) - 1));
      if (uniform01(engine) >= survive_past[idx]) continue;
      ++survivors;
      if (uniform01(engine) < survive_fut[idx]) ++joint;
    }
  }

  if (survivors == 0)
    throw SimulationError("no conditioning survivors drawn; estimate undefined");

  MonteCarloEstimate result;
  result.survivors_past = survivors;
  result.estimate = static_cast<double>(joint) / static_cast<double>(survivors);
  result.std_error = std::sqrt(result.estimate * (1.0 - result.estimate) /
                               static_cast<double>(survivors));
  return result;
}

}  // namespace horizon
