#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "extsnyder/phase_space.hpp"

namespace extsnyder {

enum class RealizationKind { Weyl, Classical, MoyalDynamical, WeylUnified };

std::string_view to_string(RealizationKind kind);
// Accepts "weyl", "classical", "moyal_dynamical", "weyl_unified". Throws ValidationError.
RealizationKind parse_realization(std::string_view name);

struct RealizeOptions {
  // Negative control for the verification pipeline: negates the deformation
  // term of the first vector coordinate.
  bool corrupt_first_coordinate = false;
};

/// Deformed phase-space operators expressed through the canonical ones.
///
/// Momenta are undeformed in every realization. Two-factor terms are built as
/// symmetric products so every realized coordinate is Hermitian.
class RealizedOps {
 public:
  RealizationKind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  const PhaseSpace& canonical() const { return *canonical_; }
  const std::shared_ptr<const PhaseSpace>& canonical_ptr() const { return canonical_; }
  int dim() const { return canonical_->dim(); }

  const Operator& x(int i) const;
  Operator x(int i, int j) const;
  const Operator& p(int i) const { return canonical_->p(i); }
  Operator p(int i, int j) const { return canonical_->p(i, j); }
  // Rotation generator M_ij, antisymmetric in (i, j).
  Operator rotation(int i, int j) const;

  // Unified coordinates X_mu,nu over 1..D+1; only for WeylUnified.
  bool has_unified() const { return !x_unified_.empty(); }
  Operator unified_x(int mu, int nu) const;

 private:
  friend RealizedOps realize(std::shared_ptr<const PhaseSpace>, const ModelParams&, RealizationKind,
                             RealizeOptions);

  Operator signed_pair(const std::vector<Operator>& ops, int i, int j, int n) const;

  RealizationKind kind_ = RealizationKind::Weyl;
  double lambda_ = 0.0;
  std::shared_ptr<const PhaseSpace> canonical_;
  std::vector<Operator> x_vec_;
  std::vector<Operator> x_ten_;      // i<j, lexicographic
  std::vector<Operator> rotations_;  // i<j, lexicographic
  std::vector<Operator> x_unified_;  // mu<nu over D+1, lexicographic
};

/// Builds the realized operators at params.lambda.
RealizedOps realize(std::shared_ptr<const PhaseSpace> canonical, const ModelParams& params,
                    RealizationKind kind, RealizeOptions options = {});

/// Convenience overload: canonical operators at (M/beta^2, omega) and (M, omega_tensor).
RealizedOps realize(const BasisPtr& basis, const ModelParams& params, RealizationKind kind);

/// M_ij = x_i p_j - x_j p_i + sum_k (x_ik p_jk - x_jk p_ik).
Operator rotation_generator(const PhaseSpace& ps, int i, int j);

/// All D(D-1)/2 generators, i<j in lexicographic order.
std::vector<Operator> rotation_generators(const PhaseSpace& ps);

}  // namespace extsnyder
