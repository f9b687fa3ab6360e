#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "horizon/minimize.hpp"

using horizon::minimize_unit_interval;

TEST_CASE("quadratic minimum found to tolerance") {
  auto m = minimize_unit_interval([](double x) { return (x - 0.3) * (x - 0.3); });
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-8));
  CHECK(m.value == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("boundary minima") {
  auto inc = minimize_unit_interval([](double x) { return x; });
  CHECK(inc.x == doctest::Approx(0.0).epsilon(1e-9));
  auto dec = minimize_unit_interval([](double x) { return 1.0 - x; });
  CHECK(dec.x == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("flat function ties break to the smallest x") {
  auto m = minimize_unit_interval([](double) { return 7.0; });
  CHECK(m.x == 0.0);
  CHECK(m.value == 7.0);
}

TEST_CASE("result never exceeds the best grid value") {
  // A needle the refinement cannot improve: the reported value must still be
  // the best evaluation seen.
  auto needle = [](double x) { return x == 0.5 ? -1.0 : 1.0; };
  auto m = minimize_unit_interval(needle, 5);
  CHECK(m.value <= 1.0);
}

TEST_CASE("narrow interior valley") {
  auto f = [](double x) { return std::cosh(40.0 * (x - 0.77)); };
  auto m = minimize_unit_interval(f);
  CHECK(m.x == doctest::Approx(0.77).epsilon(1e-8));
}
