#include "extsnyder/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

void require_hermitian(const Operator& v) {
  const double scale = std::max(1.0, v.max_abs());
  if (v.hermiticity_defect() > 1e-10 * scale) {
    throw ValidationError("perturbation: operator is not Hermitian (defect " +
                          std::to_string(v.hermiticity_defect()) + ")");
  }
}

}  // namespace

double diagonal_correction(std::size_t state, const Operator& v) {
  require_hermitian(v);
  if (state >= v.dimension()) throw StructuralError("perturbation: state index outside the basis");
  return v.coeff(state, state).real();
}

std::vector<double> diagonal_corrections(const Operator& v) {
  require_hermitian(v);
  std::vector<double> out(v.dimension());
  const Eigen::VectorXcd diag = v.matrix().diagonal();
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = diag[static_cast<Eigen::Index>(s)].real();
  return out;
}

std::vector<DegenerateBlock> degenerate_correction(const Operator& h0, const Operator& v,
                                                   const DegenerateOptions& options) {
  const std::size_t n = h0.dimension();
  if (n == 0) throw StructuralError("perturbation: empty basis");
  if (!h0.is_diagonal()) throw StructuralError("perturbation: h0 must be diagonal in the occupation basis");
  if (v.dimension() != n) throw StructuralError("perturbation: h0 and v act on different spaces");
  require_hermitian(v);

  const Eigen::VectorXcd hd = h0.matrix().diagonal();
  std::vector<double> energy(n);
  double scale = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    energy[s] = hd[static_cast<Eigen::Index>(s)].real();
    scale = std::max(scale, std::abs(energy[s]));
  }
  const double tol = options.relative_tolerance * std::max(scale, 1e-300);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return energy[a] < energy[b]; });

  // Row-major copy for fast access of V restricted to a block.
  using RowMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;
  const RowMatrix vr = v.matrix();

  std::vector<DegenerateBlock> blocks;
  std::size_t start = 0;
  while (start < n) {
    const double e0 = energy[order[start]];
    std::size_t end = start + 1;
    while (end < n && energy[order[end]] - e0 <= tol) ++end;
    if (e0 > options.max_energy || blocks.size() >= options.max_levels) break;

    DegenerateBlock block;
    block.level_energy = e0;
    block.states.assign(order.begin() + static_cast<std::ptrdiff_t>(start),
                        order.begin() + static_cast<std::ptrdiff_t>(end));
    std::sort(block.states.begin(), block.states.end());

    const auto size = static_cast<Eigen::Index>(block.states.size());
    std::vector<Eigen::Index> local(n, -1);
    for (Eigen::Index a = 0; a < size; ++a) local[block.states[static_cast<std::size_t>(a)]] = a;

    Eigen::MatrixXcd sub = Eigen::MatrixXcd::Zero(size, size);
    for (Eigen::Index a = 0; a < size; ++a) {
      for (RowMatrix::InnerIterator it(vr, static_cast<Eigen::Index>(block.states[static_cast<std::size_t>(a)])); it;
           ++it) {
        const Eigen::Index b = local[static_cast<std::size_t>(it.col())];
        if (b < 0) continue;
        sub(a, b) = it.value();
        if (a != b) block.off_diagonal_max = std::max(block.off_diagonal_max, std::abs(it.value()));
      }
    }
    for (Eigen::Index a = 0; a < size; ++a) block.diagonal.push_back(sub(a, a).real());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    block.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    blocks.push_back(std::move(block));
    start = end;
  }
  return blocks;
}

}  // namespace extsnyder
