#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extsnyder/closed_forms.hpp"
#include "extsnyder/eigensolver.hpp"
#include "extsnyder/hamiltonians.hpp"
#include "extsnyder/perturbation.hpp"

namespace extsnyder {

/// Closed-form free energy of a model.
double free_energy(ModelKind model, const Occupations& occ, const ModelParams& params);

/// Closed-form first-order correction of a model, lambda^2 included.
double correction_energy(ModelKind model, const Occupations& occ, const ModelParams& params);

/// One basis state of the free Hamiltonian with its first-order corrections.
/// All de_* values include the lambda^2 prefactor.
struct SpectrumRecord {
  int level = 0;             // index of the distinct free level, 0 = ground
  std::size_t state = 0;     // basis index
  Occupations occupations;
  double e0 = 0.0;           // closed-form free energy
  double de_closed = 0.0;
  double de_diagonal = 0.0;
  double de_degenerate = 0.0;  // block eigenvalue paired by sorted position
  std::optional<double> e_exact;
};

struct SpectrumOptions {
  int levels = 10;                    // distinct free levels to report
  double degeneracy_tolerance = 1e-9;
  bool exact = true;                  // fill e_exact from H0 + lambda^2 V
  EigenOptions eigen;
};

/// Records for every state in the lowest `levels` free levels, sorted by e0
/// then occupations. e_exact pairs the k-th lowest eigenvalue of H0 + lambda^2 V
/// with the k-th lowest e0 + de_degenerate.
std::vector<SpectrumRecord> spectrum_records(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                                             RealizationKind realization, const SpectrumOptions& options = {});

/// {"v1":0,...,"t12":1,...}
std::string occupations_json(const Occupations& occ);

}  // namespace extsnyder
