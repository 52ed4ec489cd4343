#pragma once

#include <limits>
#include <vector>

#include "extsnyder/operator.hpp"

namespace extsnyder {

/// <n|V|n> for one basis state. The lambda^2 prefactor is the caller's.
/// Throws ValidationError if V is not Hermitian to 1e-10 relative.
double diagonal_correction(std::size_t state, const Operator& v);

/// All diagonal entries of V, with the same Hermiticity check done once.
std::vector<double> diagonal_corrections(const Operator& v);

/// One degenerate level of H0 and the spectrum of V projected onto it.
struct DegenerateBlock {
  double level_energy = 0.0;
  std::vector<std::size_t> states;  // ascending basis indices
  std::vector<double> diagonal;     // <n|V|n> in `states` order
  std::vector<double> eigenvalues;  // ascending
  double off_diagonal_max = 0.0;    // max |<a|V|b>|, a != b inside the block
};

struct DegenerateOptions {
  // Relative tolerance; states are grouped when |E_a - E_b| <= tol * max|h0|.
  double relative_tolerance = 1e-9;
  // Only levels with energy <= this bound are diagonalized.
  double max_energy = std::numeric_limits<double>::infinity();
  // At most this many levels, lowest first.
  std::size_t max_levels = std::numeric_limits<std::size_t>::max();
};

/// Groups states by the diagonal of h0 and diagonalizes V inside each group.
/// Throws StructuralError for an empty basis or a non-diagonal h0, and
/// ValidationError for a non-Hermitian V.
std::vector<DegenerateBlock> degenerate_correction(const Operator& h0, const Operator& v,
                                                   const DegenerateOptions& options = {});

}  // namespace extsnyder
