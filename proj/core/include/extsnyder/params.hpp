#pragma once

#include <cstddef>

namespace extsnyder {

/// Physical and numerical parameters of one model instance (natural units, hbar = 1).
///
/// The vector-sector mass is derived, m = tensor_mass / beta^2, and is only
/// meaningful for beta > 0.
struct ModelParams {
  int dim = 2;                // spatial dimension D >= 2
  double lambda = 0.0;        // dimensionless deformation
  double beta = 1.0;          // length scale, > 0
  double tensor_mass = 1.0;   // M
  double omega = 1.0;         // vector (and covariant) frequency
  double omega_tensor = 1.0;  // tensor frequency of the two-frequency models
  int n_max = 1;              // per-mode occupation cutoff
  int interior_margin = 4;    // K used by interior residual checks

  double vector_mass() const { return tensor_mass / (beta * beta); }
  int vector_mode_count() const { return dim; }
  int tensor_mode_count() const { return dim * (dim - 1) / 2; }
  int mode_count() const { return dim * (dim + 1) / 2; }

  // Throws ValidationError naming the offending field.
  void validate() const;
};

}  // namespace extsnyder
