#include "extsnyder/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

using Dense = Eigen::MatrixXcd;

std::vector<double> dense_lowest(const Operator& h, std::size_t k) {
  const Dense m = Dense(h.matrix());
  Eigen::SelfAdjointEigenSolver<Dense> solver(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + static_cast<std::ptrdiff_t>(k)};
}

Dense random_block(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  Dense out(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) out(r, c) = Complex(g(rng), g(rng));
  return out;
}

// Orthonormalizes the columns of `block` against `basis` and each other with
// two Gram-Schmidt passes; columns that collapse are dropped. The projection
// against `basis` is done blockwise.
Dense orthonormal_extension(const Dense& basis, Dense block) {
  const Eigen::VectorXd before = block.colwise().norm().transpose();
  for (int pass = 0; pass < 2; ++pass) {
    if (basis.cols() > 0) block.noalias() -= basis * (basis.adjoint() * block);
  }
  std::vector<Eigen::Index> kept;
  for (Eigen::Index c = 0; c < block.cols(); ++c) {
    if (before[c] == 0.0) continue;
    auto col = block.col(c);
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index q : kept) col -= block.col(q) * block.col(q).dot(col);
    }
    const double after = col.norm();
    if (after <= 1e-10 * before[c]) continue;
    col /= after;
    kept.push_back(c);
  }
  Dense out(block.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = block.col(kept[i]);
  return out;
}

std::vector<double> krylov_lowest(const Operator& h, std::size_t k, const EigenOptions& options) {
  const SparseMatrix& a = h.matrix();
  const auto n = static_cast<Eigen::Index>(h.dimension());
  const auto want = static_cast<Eigen::Index>(k);
  const Eigen::Index b = std::min<Eigen::Index>(
      n, static_cast<Eigen::Index>(options.block_size > 0 ? options.block_size : std::max<std::size_t>(k, 8)));
  const Eigen::Index m_max = std::min<Eigen::Index>(n, std::max(want + 3 * b, 4 * b));
  const double scale = std::max(1.0, h.max_abs());

  // Davidson preconditioner: the operators here are dominated by their diagonal.
  Eigen::VectorXd diag(n);
  for (Eigen::Index i = 0; i < n; ++i) diag[i] = a.coeff(i, i).real();
  const double shift_floor = 1e-4 * scale;

  std::mt19937_64 rng(options.seed);
  Dense v(n, 0);
  Dense hv(n, 0);
  Dense block = random_block(rng, n, b);

  for (int restart = 0; restart <= options.max_restarts; ++restart) {
    while (v.cols() < m_max) {
      Dense q = orthonormal_extension(v, block);
      if (q.cols() == 0) q = orthonormal_extension(v, random_block(rng, n, 1));
      if (q.cols() == 0) break;
      if (v.cols() + q.cols() > m_max) q = q.leftCols(m_max - v.cols()).eval();
      const Dense hq = a * q;
      v.conservativeResize(Eigen::NoChange, v.cols() + q.cols());
      v.rightCols(q.cols()) = q;
      hv.conservativeResize(Eigen::NoChange, hv.cols() + hq.cols());
      hv.rightCols(hq.cols()) = hq;
      block = hq;
    }

    Dense t = v.adjoint() * hv;
    t = (0.5 * (t + t.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Dense> small(t);
    const Eigen::VectorXd theta = small.eigenvalues();
    const Eigen::Index keep = std::min<Eigen::Index>(v.cols(), want + b);
    const Dense y = small.eigenvectors().leftCols(keep);
    const Dense x = v * y;
    const Dense hx = hv * y;
    const Dense r = hx - x * theta.head(keep).asDiagonal();

    bool converged = true;
    for (Eigen::Index i = 0; i < want; ++i) converged = converged && r.col(i).norm() <= options.tolerance * scale;
    if (converged || v.cols() == n) {
      return {theta.data(), theta.data() + want};
    }

    std::vector<Eigen::Index> open;
    for (Eigen::Index i = 0; i < keep && static_cast<Eigen::Index>(open.size()) < b; ++i) {
      if (r.col(i).norm() > options.tolerance * scale) open.push_back(i);
    }
    // Raw residuals keep the plain block-Krylov guarantee; preconditioned ones
    // accelerate the diagonally dominant case.
    const auto open_n = static_cast<Eigen::Index>(open.size());
    Dense next(n, 2 * open_n);
    for (Eigen::Index i = 0; i < open_n; ++i) {
      const Eigen::Index j = open[static_cast<std::size_t>(i)];
      next.col(i) = r.col(j);
      auto col = next.col(open_n + i);
      for (Eigen::Index row = 0; row < n; ++row) {
        double denom = diag[row] - theta[j];
        if (std::abs(denom) < shift_floor) denom = denom < 0.0 ? -shift_floor : shift_floor;
        col[row] = r(row, j) / denom;
      }
    }
    v = x;
    hv = hx;
    block = next;
  }
  throw std::runtime_error("exact_spectrum: block Krylov solver did not converge after " +
                           std::to_string(options.max_restarts) + " restarts");
}

}  // namespace

std::vector<double> exact_spectrum(const Operator& h, std::size_t k, const EigenOptions& options) {
  if (k == 0 || k > h.dimension()) {
    throw ValidationError("levels: requested " + std::to_string(k) + " eigenvalues of a dimension-" +
                          std::to_string(h.dimension()) + " operator");
  }
  const double scale = std::max(1.0, h.max_abs());
  if (h.hermiticity_defect() > 1e-10 * scale) {
    throw ValidationError("exact_spectrum: operator is not Hermitian");
  }
  if (!options.force_iterative && h.dimension() < options.dense_threshold) return dense_lowest(h, k);
  return krylov_lowest(h, k, options);
}

}  // namespace extsnyder
