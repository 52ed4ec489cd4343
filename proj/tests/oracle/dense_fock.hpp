#pragma once

// Independent dense reference for the truncated Fock space: every operator is
// a Kronecker product of single-mode (n_max+1)x(n_max+1) matrices, first mode
// most significant. Shares no code with the library's sparse builders.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Dense = Eigen::MatrixXcd;

inline Dense single_mode_lower(int n_max) {
  Dense a = Dense::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline Dense kron(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// `local` acting on mode `mode` of `modes`, identity elsewhere.
inline Dense embed(const Dense& local, int mode, int modes) {
  const auto d = local.rows();
  Dense out = Dense::Identity(1, 1);
  for (int m = 0; m < modes; ++m) out = kron(out, m == mode ? local : Dense::Identity(d, d));
  return out;
}

struct DensePair {
  Dense x;
  Dense p;
};

inline DensePair dense_pair(int n_max, int mode, int modes, double mass, double freq) {
  const Dense a = single_mode_lower(n_max);
  const Dense ad = a.adjoint();
  const std::complex<double> i(0.0, 1.0);
  const Dense x = (a + ad) / std::sqrt(2.0 * mass * freq);
  const Dense p = i * std::sqrt(mass * freq / 2.0) * (ad - a);
  return {embed(x, mode, modes), embed(p, mode, modes)};
}

// Canonical operators of the extended phase space, laid out like the library:
// vector modes 1..D first, then tensor modes (i<j) lexicographically.
struct DensePhaseSpace {
  int d = 0;
  std::vector<Dense> xv, pv;  // index i-1
  std::vector<Dense> xt, pt;  // lexicographic i<j
  Dense zero;

  DensePhaseSpace(int dim, int n_max, double vector_mass, double vector_freq, double tensor_mass,
                  double tensor_freq)
      : d(dim) {
    const int modes = dim * (dim + 1) / 2;
    for (int i = 0; i < dim; ++i) {
      auto pr = dense_pair(n_max, i, modes, vector_mass, vector_freq);
      xv.push_back(pr.x);
      pv.push_back(pr.p);
    }
    for (int m = dim; m < modes; ++m) {
      auto pr = dense_pair(n_max, m, modes, tensor_mass, tensor_freq);
      xt.push_back(pr.x);
      pt.push_back(pr.p);
    }
    zero = Dense::Zero(xv[0].rows(), xv[0].cols());
  }

  int pair_pos(int i, int j) const {
    int pos = 0;
    for (int a = 1; a < i; ++a) pos += d - a;
    return pos + (j - i - 1);
  }
  const Dense& x(int i) const { return xv[i - 1]; }
  const Dense& p(int i) const { return pv[i - 1]; }
  Dense x(int i, int j) const { return tensor(xt, i, j); }
  Dense p(int i, int j) const { return tensor(pt, i, j); }

 private:
  Dense tensor(const std::vector<Dense>& ops, int i, int j) const {
    if (i == j) return zero;
    if (i < j) return ops[pair_pos(i, j)];
    return -ops[pair_pos(j, i)];
  }
};

inline Dense sym(const Dense& a, const Dense& b) { return 0.5 * (a * b + b * a); }

}  // namespace oracle
