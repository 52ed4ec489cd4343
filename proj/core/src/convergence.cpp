#include "extsnyder/convergence.hpp"

#include <cmath>
#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

double convergence_fit(std::span<const ConvergenceSample> samples) {
  if (samples.size() < 3) {
    throw ValidationError("convergence_fit: need at least 3 samples, got " + std::to_string(samples.size()));
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& s : samples) {
    if (!(s.lambda > 0.0)) throw ValidationError("convergence_fit: lambda must be > 0");
    if (!(s.residual > 0.0)) {
      throw ValidationError("convergence_fit: nonpositive residual at lambda=" + std::to_string(s.lambda) +
                            " (numerical floor reached)");
    }
    mean_x += std::log(s.lambda);
    mean_y += std::log(s.residual);
  }
  const auto n = static_cast<double>(samples.size());
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& s : samples) {
    const double dx = std::log(s.lambda) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(s.residual) - mean_y);
  }
  if (sxx == 0.0) throw ValidationError("convergence_fit: lambda samples must not all coincide");
  return sxy / sxx;
}

}  // namespace extsnyder
