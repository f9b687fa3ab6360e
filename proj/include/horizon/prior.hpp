#pragma once

#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

namespace horizon {

/// One point mass of a discrete pfd prior: probability `weight` that the
/// probability of failure per demand equals `pfd`.
struct PfdAtom {
  double pfd = 0.0;
  double weight = 0.0;
};

/// Discrete mixture prior over the unknown probability of failure per demand.
///
/// Stored in canonical form: atoms sorted by strictly increasing pfd, exact
/// duplicates merged, zero-weight atoms dropped, weights summing to one
/// within 1e-12. The atom at pfd = 0, when present, carries the
/// fault-freeness probability.
class PfdPrior {
 public:
  /// Canonicalises and validates; throws ValidationError on out-of-range
  /// values or weights that do not sum to one.
  explicit PfdPrior(std::vector<PfdAtom> atoms);
  PfdPrior(std::initializer_list<PfdAtom> atoms);

  std::span<const PfdAtom> atoms() const { return atoms_; }

  /// Weight of the pfd = 0 atom, 0 if absent.
  double weight_at_zero() const;

  /// Single atom at `pfd` with weight one.
  static PfdPrior point_mass(double pfd);

 private:
  std::vector<PfdAtom> atoms_;
};

/// Partial prior knowledge: probability `p` that the pfd is exactly zero.
struct PfdZero {
  double p = 0.0;
};

/// Partial prior knowledge: probability `p` that the pfd is at most
/// `q_bound`, with q_bound in (0, 1).
struct PfdBounded {
  double p = 0.0;
  double q_bound = 0.0;
};

/// What is trusted about the prior without committing to a full distribution.
using KnowledgeConstraint = std::variant<PfdZero, PfdBounded>;

/// Throws ValidationError if the constraint parameters are out of range.
void validate(const KnowledgeConstraint& constraint);

}  // namespace horizon
