#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "extsnyder/operator.hpp"

namespace extsnyder {

struct EigenOptions {
  // Dense Hermitian solve below this dimension, block Krylov above.
  std::size_t dense_threshold = 4096;
  bool force_iterative = false;
  // Block size of the Krylov path; must cover the multiplicity of the wanted
  // eigenvalues. 0 selects max(k, 8).
  std::size_t block_size = 0;
  // Convergence: ||H y - theta y|| <= tolerance * spectral scale.
  double tolerance = 1e-11;
  int max_restarts = 1000;
  std::uint64_t seed = 0x5eed5eedULL;
};

/// The k lowest eigenvalues of a Hermitian operator, ascending.
/// Throws ValidationError for a non-Hermitian operator or k > dimension, and
/// std::runtime_error if the Krylov path fails to converge.
std::vector<double> exact_spectrum(const Operator& h, std::size_t k, const EigenOptions& options = {});

}  // namespace extsnyder
