#include <doctest.h>

#include <cmath>
#include <vector>

#include "extsnyder/convergence.hpp"
#include "extsnyder/error.hpp"

using namespace extsnyder;

namespace {
std::vector<ConvergenceSample> power_law(double c, double order) {
  std::vector<ConvergenceSample> s;
  for (double lam : {0.025, 0.05, 0.1, 0.2}) s.push_back({lam, c * std::pow(lam, order)});
  return s;
}
}  // namespace

TEST_CASE("power laws give their exponent") {
  CHECK(convergence_fit(power_law(1.0, 2.0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(convergence_fit(power_law(3.7, 4.0)) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(std::abs(convergence_fit(power_law(0.5, 0.0))) < 1e-12);
}

TEST_CASE("fits reject short or degenerate samples") {
  const std::vector<ConvergenceSample> two{{0.1, 1.0}, {0.2, 2.0}};
  CHECK_THROWS_AS(convergence_fit(two), ValidationError);
  const std::vector<ConvergenceSample> zero{{0.1, 1.0}, {0.2, 0.0}, {0.3, 1.0}};
  CHECK_THROWS_AS(convergence_fit(zero), ValidationError);
  const std::vector<ConvergenceSample> same{{0.1, 1.0}, {0.1, 2.0}, {0.1, 3.0}};
  CHECK_THROWS_AS(convergence_fit(same), ValidationError);
  const std::vector<ConvergenceSample> negative{{-0.1, 1.0}, {0.1, 2.0}, {0.2, 3.0}};
  CHECK_THROWS_AS(convergence_fit(negative), ValidationError);
}
