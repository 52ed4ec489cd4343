#include "extsnyder/params.hpp"

#include <cmath>
#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

void require(bool ok, const char* field, const std::string& what) {
  if (!ok) throw ValidationError(std::string(field) + ": " + what);
}

}  // namespace

void ModelParams::validate() const {
  require(dim >= 2, "d", "spatial dimension must be >= 2 (no tensor modes below 2)");
  require(std::isfinite(lambda), "lambda", "must be finite");
  require(std::isfinite(beta) && beta > 0.0, "beta", "must be finite and > 0");
  require(std::isfinite(tensor_mass) && tensor_mass > 0.0, "tensor_mass", "must be finite and > 0");
  require(std::isfinite(omega) && omega > 0.0, "omega", "must be finite and > 0");
  require(std::isfinite(omega_tensor) && omega_tensor > 0.0, "omega_tensor",
          "must be finite and > 0");
  require(n_max >= 0, "n_max", "must be >= 0");
  require(interior_margin >= 0, "interior_margin", "must be >= 0");
  const double m = vector_mass();
  require(std::isfinite(m) && m > 0.0, "beta", "derived vector mass tensor_mass/beta^2 is not finite");
}

}  // namespace extsnyder
