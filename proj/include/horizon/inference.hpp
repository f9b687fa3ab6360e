#pragma once

#include <cmath>
#include <limits>

#include "horizon/prior.hpp"

namespace horizon {

/// Sentinel for quantities without a finite value (extension coefficients and
/// horizons that hold for arbitrarily long operation).
constexpr double unbounded() { return std::numeric_limits<double>::infinity(); }

inline bool is_unbounded(double v) { return std::isinf(v) && v > 0.0; }

/// Outcome of a worst-case posterior minimisation. `minimizer_x` is the
/// transformed variable x = (1 - q)^t_past at which the minimum is attained,
/// `minimizer_q` the corresponding pfd.
struct WorstCaseResult {
  double bound = 1.0;
  double minimizer_x = 0.0;
  double minimizer_q = 1.0;
};

/// (1 - q)^t evaluated in the log domain; q = 1 yields 0 unless t = 0.
double survival_pow(double q, double t);

/// Probability of completing `t_fut` demands without mishap under the prior
/// mixture: sum of w_i * (1 - q_i)^t_fut.
double survival_probability(const PfdPrior& prior, double t_fut);

/// Probability of `t_fut` further mishap-free demands after `t_past`
/// mishap-free demands, by Bayes' theorem. Throws EvidenceError when the
/// prior assigns probability zero to surviving `t_past`.
double posterior_reliability(const PfdPrior& prior, double t_past,
                             double t_fut);

/// Most pessimistic posterior reliability over `t_fut` compatible with a
/// prior that puts weight `p_zero` on pfd = 0 and anything elsewhere.
///
/// The infimum over all such priors is attained with the free mass at a
/// single point, so it reduces to minimising
///   h(x) = (p + (1-p) x^(1+rho)) / (p + (1-p) x),   rho = t_fut / t_past,
/// over x = (1 - q)^t_past in [0, 1]. The bound depends on (t_past, t_fut)
/// only through rho and never drops below p_zero.
WorstCaseResult worst_case_posterior_pfd_zero(double p_zero, double t_past,
                                              double t_fut);

/// Most pessimistic posterior reliability compatible with prior probability
/// `p_bound` that the pfd is at most `q_bound`.
///
/// The worst case places the constrained mass exactly at q_bound and the rest
/// at a single free point q* >= q_bound; substituting z = y / (1-q_bound)^t_past
/// for the free atom's survival y factorises the two-atom objective into
/// (1 - q_bound)^t_fut times the pfd-zero objective in z, which is what gets
/// minimised. Converges to worst_case_posterior_pfd_zero as q_bound -> 0.
WorstCaseResult worst_case_posterior_bounded(double p_bound, double q_bound,
                                             double t_past, double t_fut);

/// True when the residual risk of a pfd at `q_bound`, over `t_fut` demands,
/// is within `epsilon`: 1 - (1 - q_bound)^t_fut <= epsilon. Used to warn when
/// a bounded-pfd claim stops behaving like a fault-freeness claim.
bool check_negligibility(double q_bound, double t_fut, double epsilon);

/// Largest k such that the worst-case posterior reliability over
/// t_fut = k * t_past stays at or above `confidence`; unbounded() when the
/// required confidence is at or below the large-k limit of the bound (the
/// fault-freeness probability in the PfdZero case). For PfdZero constraints
/// the result does not depend on t_past.
double extension_coefficient(const KnowledgeConstraint& constraint,
                             double confidence, double t_past);

}  // namespace horizon
