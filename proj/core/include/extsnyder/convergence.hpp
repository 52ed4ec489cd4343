#pragma once

#include <span>

namespace extsnyder {

struct ConvergenceSample {
  double lambda = 0.0;
  double residual = 0.0;
};

/// Least-squares slope of log(residual) against log(lambda).
///
/// Needs at least three samples with distinct positive lambda. A nonpositive
/// residual throws ValidationError: it means the residual sits at the
/// numerical floor and the caller must enlarge lambda or the tolerance.
double convergence_fit(std::span<const ConvergenceSample> samples);

}  // namespace extsnyder
