#pragma once

#include <cmath>
#include <vector>

namespace horizon {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

/// Minimises f over [0, 1]: evaluate on a uniform grid, then refine the
/// bracket around the best grid point with golden-section search.
///
/// The grid minimum alone is already an upper bound on the true minimum, so
/// refinement can only improve the result, never make it optimistic. Grid
/// points whose values tie the minimum within 1e-14 resolve to the smallest x.
template <class F>
ScalarMinimum minimize_unit_interval(F&& f, int grid_points = 1025,
                                     double x_tol = 1e-10) {
  const int n = grid_points < 3 ? 3 : grid_points;
  std::vector<double> values(static_cast<std::size_t>(n));
  double best = f(0.0);
  values[0] = best;
  for (int i = 1; i < n; ++i) {
    const double x = static_cast<double>(i) / (n - 1);
    values[static_cast<std::size_t>(i)] = f(x);
    if (values[static_cast<std::size_t>(i)] < best)
      best = values[static_cast<std::size_t>(i)];
  }
  int best_index = 0;
  while (values[static_cast<std::size_t>(best_index)] > best + 1e-14)
    ++best_index;

  // Golden-section on the bracket around the winning grid point.
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = std::max(0.0, (best_index - 1.0) / (n - 1));
  double b = std::min(1.0, (best_index + 1.0) / (n - 1));
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > x_tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double xr = 0.5 * (a + b);
  const double fr = f(xr);

  const double grid_best = values[static_cast<std::size_t>(best_index)];
  if (fr < grid_best) return {xr, fr};
  return {static_cast<double>(best_index) / (n - 1), grid_best};
}

}  // namespace horizon
