#include "horizon/inference.hpp"

#include <algorithm>
#include <cmath>

#include "horizon/errors.hpp"
#include "horizon/minimize.hpp"

namespace horizon {

namespace {

void require_operation_count(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0)
    throw ValidationError(std::string(what) + " must be a finite nonnegative demand count");
}

// Objective of the worst-case minimisation in the transformed variable
// x = (1 - q)^t_past. With p = 0 the ratio degenerates to x^rho; the x = 0
// endpoint then stands for the limit from the right.
double pfd_zero_objective(double x, double p, double rho) {
  if (p == 0.0) return rho == 0.0 ? 1.0 : std::pow(x, rho);
  const double num = p + (1.0 - p) * std::pow(x, 1.0 + rho);
  const double den = p + (1.0 - p) * x;
  return num / den;
}

ScalarMinimum minimize_pfd_zero_objective(double p, double rho) {
  return minimize_unit_interval(
      [p, rho](double x) { return pfd_zero_objective(x, p, rho); });
}

// pfd at which a given survival value x = (1 - q)^t_past is attained.
double pfd_from_transformed(double x, double t_past) {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return -std::expm1(std::log(x) / t_past);
}

}  // namespace

double survival_pow(double q, double t) {
  if (t == 0.0) return 1.0;
  if (q == 0.0) return 1.0;
  if (q == 1.0) return 0.0;
  return std::exp(t * std::log1p(-q));
}

double survival_probability(const PfdPrior& prior, double t_fut) {
  require_operation_count(t_fut, "t_fut");
  double sum = 0.0;
  for (const PfdAtom& a : prior.atoms()) sum += a.weight * survival_pow(a.pfd, t_fut);
  return std::clamp(sum, 0.0, 1.0);
}

double posterior_reliability(const PfdPrior& prior, double t_past,
                             double t_fut) {
  require_operation_count(t_past, "t_past");
  require_operation_count(t_fut, "t_fut");
  const double den = survival_probability(prior, t_past);
  if (den <= 0.0)
    throw EvidenceError(
        "prior assigns probability zero to the observed mishap-free operation");
  const double num = survival_probability(prior, t_past + t_fut);
  return std::min(num / den, 1.0);
}

WorstCaseResult worst_case_posterior_pfd_zero(double p_zero, double t_past,
                                              double t_fut) {
  if (!std::isfinite(p_zero) || p_zero < 0.0 || p_zero > 1.0)
    throw ValidationError("fault-freeness probability must lie in [0, 1]");
  require_operation_count(t_fut, "t_fut");
  if (!std::isfinite(t_past) || t_past <= 0.0)
    throw EvidenceError(
        "worst-case posterior needs past operation; use survival_probability "
        "for prior-only claims");

  const double rho = t_fut / t_past;
  const ScalarMinimum m = minimize_pfd_zero_objective(p_zero, rho);
  WorstCaseResult result;
  result.bound = std::clamp(m.value, p_zero, 1.0);
  result.minimizer_x = m.x;
  result.minimizer_q = pfd_from_transformed(m.x, t_past);
  return result;
}

WorstCaseResult worst_case_posterior_bounded(double p_bound, double q_bound,
                                             double t_past, double t_fut) {
  validate(KnowledgeConstraint{PfdBounded{p_bound, q_bound}});
  require_operation_count(t_fut, "t_fut");
  if (!std::isfinite(t_past) || t_past <= 0.0)
    throw EvidenceError(
        "worst-case posterior needs past operation; use survival_probability "
        "for prior-only claims");

  const double rho = t_fut / t_past;
  const ScalarMinimum m = minimize_pfd_zero_objective(p_bound, rho);

  WorstCaseResult result;
  result.bound = std::clamp(survival_pow(q_bound, t_fut) * m.value, 0.0, 1.0);
  // z = (1 - q*)^t_past / (1 - q_bound)^t_past, so
  // 1 - q* = (1 - q_bound) * z^(1/t_past).
  const double one_minus_q =
      m.x <= 0.0 ? 0.0 : (1.0 - q_bound) * std::exp(std::log(m.x) / t_past);
  result.minimizer_q = std::clamp(1.0 - one_minus_q, q_bound, 1.0);
  result.minimizer_x = survival_pow(result.minimizer_q, t_past);
  return result;
}

bool check_negligibility(double q_bound, double t_fut, double epsilon) {
  if (!std::isfinite(q_bound) || q_bound < 0.0 || q_bound > 1.0)
    throw ValidationError("pfd bound must lie in [0, 1]");
  require_operation_count(t_fut, "t_fut");
  if (!std::isfinite(epsilon) || epsilon < 0.0)
    throw ValidationError("epsilon must be nonnegative");
  const double residual_risk = (q_bound == 1.0 && t_fut > 0.0)
                                   ? 1.0
                                   : -std::expm1(t_fut * std::log1p(-q_bound));
  return residual_risk <= epsilon;
}

double extension_coefficient(const KnowledgeConstraint& constraint,
                             double confidence, double t_past) {
  validate(constraint);
  if (!std::isfinite(confidence) || confidence <= 0.0 || confidence >= 1.0)
    throw ValidationError("confidence must lie strictly inside (0, 1)");
  if (!std::isfinite(t_past) || t_past <= 0.0)
    throw EvidenceError("extension coefficient needs past operation");

  // Worst-case bound at horizon multiple k; non-increasing in k.
  auto bound_at = [&](double k) {
    if (const auto* z = std::get_if<PfdZero>(&constraint))
      return minimize_pfd_zero_objective(z->p, k).value;
    const auto& b = std::get<PfdBounded>(constraint);
    return survival_pow(b.q_bound, k * t_past) *
           minimize_pfd_zero_objective(b.p, k).value;
  };

  if (const auto* z = std::get_if<PfdZero>(&constraint)) {
    // The large-k limit of the bound is the fault-freeness probability.
    if (confidence <= z->p) return unbounded();
  }

  // Bracket the crossing by doubling, then bisect; the verified lower end is
  // returned so the reported k never overstates the horizon.
  constexpr double kMaxCoefficient = 0x1p50;
  double lo = 0.0;
  double hi = 1.0;
  while (bound_at(hi) >= confidence) {
    lo = hi;
    hi *= 2.0;
    if (hi > kMaxCoefficient) return unbounded();
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, lo); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (bound_at(mid) >= confidence)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace horizon
