#include "extsnyder/operator.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

std::optional<bool> both_hermitian(std::optional<bool> a, std::optional<bool> b) {
  if (a == true && b == true) return true;
  return std::nullopt;
}

}  // namespace

Operator::Operator(BasisPtr basis, SparseMatrix matrix, std::optional<bool> hermitian_hint)
    : basis_(std::move(basis)), matrix_(std::move(matrix)), hermitian_hint_(hermitian_hint) {
  if (!basis_) throw StructuralError("operator requires a basis");
  const auto n = static_cast<Eigen::Index>(basis_->dimension());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw StructuralError("operator matrix shape does not match basis dimension");
  }
  matrix_.makeCompressed();
}

Operator Operator::zero(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->dimension());
  return Operator(std::move(basis), SparseMatrix(n, n), true);
}

Operator Operator::identity(BasisPtr basis) {
  const auto n = static_cast<Eigen::Index>(basis->dimension());
  SparseMatrix m(n, n);
  m.setIdentity();
  return Operator(std::move(basis), std::move(m), true);
}

Operator Operator::diagonal(BasisPtr basis, const Eigen::VectorXd& values) {
  const auto n = static_cast<Eigen::Index>(basis->dimension());
  if (values.size() != n) throw StructuralError("diagonal values do not match basis dimension");
  std::vector<Eigen::Triplet<Complex>> trips;
  trips.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    if (values[k] != 0.0) trips.emplace_back(k, k, Complex(values[k], 0.0));
  }
  SparseMatrix m(n, n);
  m.setFromTriplets(trips.begin(), trips.end());
  return Operator(std::move(basis), std::move(m), true);
}

Complex Operator::coeff(std::size_t row, std::size_t col) const {
  return matrix_.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

Operator Operator::adjoint() const {
  SparseMatrix adj = matrix_.adjoint();
  return Operator(basis_, std::move(adj), hermitian_hint_);
}

Operator Operator::hermitian_part() const {
  SparseMatrix adj = matrix_.adjoint();
  SparseMatrix h = (matrix_ + adj) * Complex(0.5, 0.0);
  return Operator(basis_, std::move(h), true);
}

void Operator::require_same_space(const Operator& other) const {
  if (basis_ != other.basis_ && !basis_->same_space(*other.basis_)) {
    throw StructuralError("operators act on different Fock bases");
  }
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_space(other);
  matrix_ += other.matrix_;
  hermitian_hint_ = both_hermitian(hermitian_hint_, other.hermitian_hint_);
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_space(other);
  matrix_ -= other.matrix_;
  hermitian_hint_ = both_hermitian(hermitian_hint_, other.hermitian_hint_);
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  matrix_ *= s;
  if (s.imag() != 0.0) hermitian_hint_.reset();
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  a.require_same_space(b);
  SparseMatrix prod = (a.matrix_ * b.matrix_).pruned();
  return Operator(a.basis_, std::move(prod));
}

double Operator::max_abs() const {
  double best = 0.0;
  for (Eigen::Index k = 0; k < matrix_.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

double Operator::hermiticity_defect() const {
  SparseMatrix adj = matrix_.adjoint();
  SparseMatrix diff = matrix_ - adj;
  double best = 0.0;
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

bool Operator::is_diagonal() const {
  for (Eigen::Index k = 0; k < matrix_.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it) {
      if (it.row() != it.col() && it.value() != Complex(0.0, 0.0)) return false;
    }
  }
  return true;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator symmetric_product(const Operator& a, const Operator& b) {
  return (a * b + b * a) * 0.5;
}

}  // namespace extsnyder
