#pragma once

#include <vector>

#include "extsnyder/fock_ops.hpp"

namespace extsnyder {

/// Mass and frequency used to build the canonical pair of each sector.
struct SectorScales {
  double vector_mass = 1.0;
  double vector_freq = 1.0;
  double tensor_mass = 1.0;
  double tensor_freq = 1.0;
};

/// Canonical operators x_i, p_i, x_ij, p_ij of the extended Heisenberg algebra
/// on one truncated basis.
///
/// Tensor accessors take any ordered pair: x(j, i) = -x(i, j), x(i, i) = 0.
/// The unified accessors use Greek indices 1..D+1 with
///   X(i, D+1) = x_i / beta,  P(i, D+1) = beta p_i,
/// so that every unified pair is a mass-M coordinate when the vector mass is M/beta^2.
class PhaseSpace {
 public:
  PhaseSpace(BasisPtr basis, SectorScales scales, double beta);

  // Vector sector at (M/beta^2, omega), tensor sector at (M, tensor_freq).
  static PhaseSpace for_model(BasisPtr basis, const ModelParams& params, double tensor_freq);

  const BasisPtr& basis() const { return basis_; }
  int dim() const { return basis_->dim(); }
  double beta() const { return beta_; }
  const SectorScales& scales() const { return scales_; }

  const Operator& x(int i) const;
  const Operator& p(int i) const;
  Operator x(int i, int j) const;
  Operator p(int i, int j) const;

  Operator unified_x(int mu, int nu) const;
  Operator unified_p(int mu, int nu) const;

  const Operator& zero() const { return zero_; }

 private:
  Operator signed_tensor(const std::vector<Operator>& ops, int i, int j) const;

  BasisPtr basis_;
  SectorScales scales_;
  double beta_;
  Operator zero_;
  std::vector<Operator> x_vec_, p_vec_;
  std::vector<Operator> x_ten_, p_ten_;  // indexed by tensor position (mode - D)
};

}  // namespace extsnyder
