#pragma once

#include <string>
#include <string_view>

#include "extsnyder/realizations.hpp"

namespace extsnyder {

enum class ModelKind {
  CovariantExtended,
  SplitEqualFrequency,
  SplitTwoFrequencyWeyl,
  SplitTwoFrequencyClassical,
  MoyalDynamic,
};

std::string_view to_string(ModelKind kind);
// Accepts "covariant_extended", "split_equal_frequency", "split_two_frequency_weyl",
// "split_two_frequency_classical", "moyal_dynamic". Throws ValidationError.
ModelKind parse_model(std::string_view name);

// omega for the covariant and equal-frequency models, omega_tensor otherwise.
double tensor_frequency(ModelKind model, const ModelParams& params);

// The realization each model is derived from.
RealizationKind default_realization(ModelKind model);

// Throws ValidationError unless `realization` generates `model`'s potential.
void require_consistent(ModelKind model, RealizationKind realization);

/// Canonical operators with the model's sector scales:
/// vector (M/beta^2, omega), tensor (M, tensor_frequency(model)).
std::shared_ptr<const PhaseSpace> model_phase_space(const BasisPtr& basis, const ModelParams& params,
                                                    ModelKind model);

/// Diagonal free Hamiltonian omega (sum n_i + D/2) + omega_T (sum_{i<j} n_ij + D(D-1)/4).
Operator build_free(const BasisPtr& basis, const ModelParams& params, ModelKind model);

/// H = H0 + lambda^2 V. `raw_hermiticity_defect` is max |V - V^dagger| of the
/// verbatim monomial ordering before (V + V^dagger)/2 is taken.
struct HamiltonianParts {
  ModelKind model = ModelKind::CovariantExtended;
  Operator h0;
  Operator v;
  double raw_hermiticity_defect = 0.0;

  Operator full(double lambda) const { return h0 + (lambda * lambda) * v; }
};

/// The quartic interaction V of `model`, lambda independent.
HamiltonianParts build_parts(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                             RealizationKind realization);
Operator build_interaction(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                           RealizationKind realization);

/// Covariant V rewritten through number operators:
/// (M w^2/8) (sum_{mu!=nu} sum_rho N_mu,rho N_nu,rho + (D-1) sum_{mu!=nu} N_mu,nu).
Operator covariant_number_form(const BasisPtr& basis, const ModelParams& params);

/// H with realized coordinates substituted into the model's quadratic form:
/// sum_i (p_i^2/2m + m w^2 xhat_i^2/2) + sum_{i<j} (p_ij^2/2M + M w_T^2 xhat_ij^2/2).
Operator build_from_realization(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                                RealizationKind realization);

/// (H(lambda) - H(-lambda)) / (2 lambda) of the direct-substitution Hamiltonian.
/// Throws ValidationError at lambda = 0.
Operator order_lambda_part(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                           RealizationKind realization);

/// (H(lambda) + H(-lambda) - 2 H(0)) / (2 lambda^2); exact when H is quadratic in lambda.
Operator order_lambda_squared_part(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                                   RealizationKind realization);

}  // namespace extsnyder
