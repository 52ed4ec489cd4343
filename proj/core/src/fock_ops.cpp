#include "extsnyder/fock_ops.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix lowering_matrix(const FockBasis& basis, std::size_t mode) {
  const auto n = static_cast<Eigen::Index>(basis.dimension());
  const std::size_t stride = basis.stride(mode);
  std::vector<Triplet> trips;
  trips.reserve(basis.dimension());
  for (std::size_t s = 0; s < basis.dimension(); ++s) {
    const int occ = basis.occupation(s, mode);
    if (occ == 0) continue;
    trips.emplace_back(static_cast<Eigen::Index>(s - stride), static_cast<Eigen::Index>(s),
                       Complex(std::sqrt(static_cast<double>(occ)), 0.0));
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  return m;
}

}  // namespace

Operator ladder(const BasisPtr& basis, const ModeId& mode, LadderKind kind) {
  const std::size_t k = basis->mode_index(mode);
  SparseMatrix lower = lowering_matrix(*basis, k);
  if (kind == LadderKind::Lower) return Operator(basis, std::move(lower), false);
  SparseMatrix raise = lower.adjoint();
  return Operator(basis, std::move(raise), false);
}

Operator number_op(const BasisPtr& basis, const ModeId& mode) {
  const std::size_t k = basis->mode_index(mode);
  Eigen::VectorXd values(static_cast<Eigen::Index>(basis->dimension()));
  for (std::size_t s = 0; s < basis->dimension(); ++s) {
    values[static_cast<Eigen::Index>(s)] = basis->occupation(s, k);
  }
  return Operator::diagonal(basis, values);
}

CanonicalPair canonical_pair(const BasisPtr& basis, const ModeId& mode, double mass, double freq) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ValidationError("canonical_pair: mass must be finite and > 0");
  }
  if (!(freq > 0.0) || !std::isfinite(freq)) {
    throw ValidationError("canonical_pair: frequency must be finite and > 0");
  }
  const std::size_t k = basis->mode_index(mode);
  const SparseMatrix a = lowering_matrix(*basis, k);
  const SparseMatrix ad = a.adjoint();
  const double mw = mass * freq;
  SparseMatrix x = (a + ad) * Complex(1.0 / std::sqrt(2.0 * mw), 0.0);
  SparseMatrix p = (ad - a) * Complex(0.0, std::sqrt(mw / 2.0));
  return {Operator(basis, std::move(x), true), Operator(basis, std::move(p), true)};
}

std::vector<bool> interior_mask(const FockBasis& basis, int margin) {
  if (margin < 0 || margin > basis.n_max()) {
    throw ValidationError("interior margin K=" + std::to_string(margin) + " outside [0, n_max=" +
                          std::to_string(basis.n_max()) + "]");
  }
  const int limit = basis.n_max() - margin;
  std::vector<bool> mask(basis.dimension());
  for (std::size_t s = 0; s < basis.dimension(); ++s) mask[s] = basis.max_occupation(s) <= limit;
  return mask;
}

Operator interior_projector(const BasisPtr& basis, int margin) {
  const auto mask = interior_mask(*basis, margin);
  Eigen::VectorXd values(static_cast<Eigen::Index>(basis->dimension()));
  for (std::size_t s = 0; s < mask.size(); ++s) values[static_cast<Eigen::Index>(s)] = mask[s] ? 1.0 : 0.0;
  return Operator::diagonal(basis, values);
}

double interior_residual_norm(const Operator& op, int margin) {
  const auto mask = interior_mask(*op.basis(), margin);
  const SparseMatrix& m = op.matrix();
  double best = 0.0;
  for (Eigen::Index col = 0; col < m.outerSize(); ++col) {
    if (!mask[static_cast<std::size_t>(col)]) continue;
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      if (mask[static_cast<std::size_t>(it.row())]) best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

}  // namespace extsnyder
