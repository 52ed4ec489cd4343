#pragma once

#include <complex>
#include <optional>

#include <Eigen/SparseCore>

#include "extsnyder/fock_basis.hpp"

namespace extsnyder {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// Sparse complex matrix acting on a FockBasis.
///
/// Arithmetic is exact sparse matrix arithmetic; operands must live on the
/// same space (StructuralError otherwise). Values are immutable once built
/// and safe to share between threads.
class Operator {
 public:
  Operator(BasisPtr basis, SparseMatrix matrix, std::optional<bool> hermitian_hint = std::nullopt);

  static Operator zero(BasisPtr basis);
  static Operator identity(BasisPtr basis);
  // Diagonal operator from one real value per basis state.
  static Operator diagonal(BasisPtr basis, const Eigen::VectorXd& values);

  const BasisPtr& basis() const { return basis_; }
  const SparseMatrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return static_cast<std::size_t>(matrix_.rows()); }
  std::optional<bool> hermitian_hint() const { return hermitian_hint_; }

  Complex coeff(std::size_t row, std::size_t col) const;

  Operator adjoint() const;
  // (A + A^dagger) / 2
  Operator hermitian_part() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator-(Operator a) { return a *= -1.0; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(Operator a, double s) { return a *= s; }
  friend Operator operator*(double s, Operator a) { return a *= s; }
  friend Operator operator*(const Operator& a, const Operator& b);

  // Largest |entry|; 0 for the zero operator.
  double max_abs() const;
  // max |A - A^dagger|
  double hermiticity_defect() const;
  bool is_diagonal() const;

 private:
  void require_same_space(const Operator& other) const;

  BasisPtr basis_;
  SparseMatrix matrix_;
  std::optional<bool> hermitian_hint_;
};

Operator commutator(const Operator& a, const Operator& b);
// (AB + BA) / 2, the symmetric (Weyl-ordered) product of two factors.
Operator symmetric_product(const Operator& a, const Operator& b);

}  // namespace extsnyder
