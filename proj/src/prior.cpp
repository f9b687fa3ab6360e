#include "horizon/prior.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "horizon/errors.hpp"

namespace horizon {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

bool valid_probability(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

}  // namespace

PfdPrior::PfdPrior(std::vector<PfdAtom> atoms) : atoms_(std::move(atoms)) {
  for (const PfdAtom& a : atoms_) {
    if (!valid_probability(a.pfd))
      throw ValidationError("prior atom pfd must lie in [0, 1]");
    if (!std::isfinite(a.weight) || a.weight < 0.0)
      throw ValidationError("prior atom weight must be nonnegative");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const PfdAtom& a, const PfdAtom& b) { return a.pfd < b.pfd; });

  // Merge exact duplicates, drop zero weights.
  std::vector<PfdAtom> merged;
  merged.reserve(atoms_.size());
  for (const PfdAtom& a : atoms_) {
    if (!merged.empty() && merged.back().pfd == a.pfd)
      merged.back().weight += a.weight;
    else
      merged.push_back(a);
  }
  std::erase_if(merged, [](const PfdAtom& a) { return a.weight == 0.0; });
  atoms_ = std::move(merged);

  double sum = 0.0;
  for (const PfdAtom& a : atoms_) sum += a.weight;
  if (std::abs(sum - 1.0) > kWeightSumTolerance) {
    std::ostringstream msg;
    msg << "prior weights must sum to 1 (got " << sum << ")";
    throw ValidationError(msg.str());
  }
}

PfdPrior::PfdPrior(std::initializer_list<PfdAtom> atoms)
    : PfdPrior(std::vector<PfdAtom>(atoms)) {}

double PfdPrior::weight_at_zero() const {
  if (!atoms_.empty() && atoms_.front().pfd == 0.0) return atoms_.front().weight;
  return 0.0;
}

PfdPrior PfdPrior::point_mass(double pfd) { return PfdPrior({{pfd, 1.0}}); }

void validate(const KnowledgeConstraint& constraint) {
  if (const auto* z = std::get_if<PfdZero>(&constraint)) {
    if (!valid_probability(z->p))
      throw ValidationError("fault-freeness probability must lie in [0, 1]");
    return;
  }
  const auto& b = std::get<PfdBounded>(constraint);
  if (!valid_probability(b.p))
    throw ValidationError("bounded-pfd probability must lie in [0, 1]");
  if (!std::isfinite(b.q_bound) || b.q_bound <= 0.0 || b.q_bound >= 1.0)
    throw ValidationError("pfd bound must lie strictly inside (0, 1)");
}

}  // namespace horizon
