#pragma once

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "extsnyder/operator.hpp"
#include "dense_fock.hpp"

namespace testing {

inline extsnyder::ModelParams params(int d, int n_max, double lambda = 0.0) {
  extsnyder::ModelParams p;
  p.dim = d;
  p.n_max = n_max;
  p.lambda = lambda;
  return p;
}

inline oracle::Dense dense(const extsnyder::Operator& op) { return oracle::Dense(op.matrix()); }

inline double max_diff(const extsnyder::Operator& op, const oracle::Dense& ref) {
  return (dense(op) - ref).cwiseAbs().maxCoeff();
}

}  // namespace testing
