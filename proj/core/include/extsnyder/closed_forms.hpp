#pragma once

#include <string_view>
#include <vector>

#include "extsnyder/fock_basis.hpp"

namespace extsnyder {

/// Printed closed-form energies. Corrections include the lambda^2 prefactor.
enum class FormulaId {
  CovariantFree,                    // (w/2)(sum_{mu!=nu} n + D(D+1)/2)
  CovariantCorrection,              // lambda^2 beta^2 m w^2/8 (...)
  SplitFree,                        // w (sum n_i + 1/2 sum_{i!=j} n_ij + D(D+1)/4)
  SplitCorrection,
  TwoFrequencyFree,                 // w (sum n_i + D/2) + (W/2)(sum_{i!=j} n_ij + D(D-1)/2)
  TwoFrequencyWeylCorrection,
  TensorGroundApproximation,        // full energy with every n_ij = 0
  TwoFrequencyClassicalCorrection,
  MoyalEnergy,                      // full energy, free part included
};

std::string_view to_string(FormulaId id);

/// Occupations in split form. Tensor entries are stored for i<j in
/// lexicographic order; lookups are symmetric and n(i, i) = 0.
struct Occupations {
  std::vector<int> vector_n;
  std::vector<int> tensor_n;

  static Occupations vacuum(int dim);
  static Occupations of_state(const FockBasis& basis, std::size_t state);

  int dim() const { return static_cast<int>(vector_n.size()); }
  int n(int i) const { return vector_n.at(static_cast<std::size_t>(i - 1)); }
  int n(int i, int j) const;
  int& tensor(int i, int j);
  int total() const;

  // Throws ValidationError on wrong sizes or negative entries.
  void validate() const;
};

/// Occupations over unified pairs 1..D+1: n(i, D+1) = n_i.
struct UnifiedOccupations {
  int top = 0;  // D + 1
  std::vector<int> pair_n;  // mu<nu lexicographic

  int n(int mu, int nu) const;
};

UnifiedOccupations to_unified(const Occupations& occ);

/// Value of the printed formula at `occ`. Validates occupations and params.
double closed_form(FormulaId id, const Occupations& occ, const ModelParams& params);

/// Covariant formulas evaluated directly on unified occupations.
double covariant_free(const UnifiedOccupations& occ, const ModelParams& params);
double covariant_correction(const UnifiedOccupations& occ, const ModelParams& params);

}  // namespace extsnyder
