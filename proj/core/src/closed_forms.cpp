#include "extsnyder/closed_forms.hpp"

#include <numeric>
#include <utility>
#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

std::size_t pair_pos(int i, int j, int n) {
  std::size_t pos = 0;
  for (int a = 1; a < i; ++a) pos += static_cast<std::size_t>(n - a);
  return pos + static_cast<std::size_t>(j - i - 1);
}

// Sums shared by the split corrections; every i!=j sum runs over ordered pairs.
struct SplitSums {
  double tensor_tensor = 0;  // sum_{i!=j} sum_k n_ik n_jk
  double vector_vector = 0;  // sum_{i!=j} n_i n_j
  double vector_tensor = 0;  // sum_{i!=j} n_i n_ij
  double vector_total = 0;   // sum_i n_i
  double tensor_total = 0;   // sum_{i!=j} n_ij

  explicit SplitSums(const Occupations& o) {
    const int d = o.dim();
    for (int i = 1; i <= d; ++i) {
      vector_total += o.n(i);
      for (int j = 1; j <= d; ++j) {
        if (i == j) continue;
        vector_vector += double(o.n(i)) * o.n(j);
        vector_tensor += double(o.n(i)) * o.n(i, j);
        tensor_total += o.n(i, j);
        for (int k = 1; k <= d; ++k) tensor_tensor += double(o.n(i, k)) * o.n(j, k);
      }
    }
  }
};

}  // namespace

std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::CovariantFree: return "covariant_free";
    case FormulaId::CovariantCorrection: return "covariant_correction";
    case FormulaId::SplitFree: return "split_free";
    case FormulaId::SplitCorrection: return "split_correction";
    case FormulaId::TwoFrequencyFree: return "two_frequency_free";
    case FormulaId::TwoFrequencyWeylCorrection: return "two_frequency_weyl_correction";
    case FormulaId::TensorGroundApproximation: return "tensor_ground_approximation";
    case FormulaId::TwoFrequencyClassicalCorrection: return "two_frequency_classical_correction";
    case FormulaId::MoyalEnergy: return "moyal_energy";
  }
  return "unknown";
}

Occupations Occupations::vacuum(int dim) {
  Occupations o;
  o.vector_n.assign(static_cast<std::size_t>(dim), 0);
  o.tensor_n.assign(static_cast<std::size_t>(dim * (dim - 1) / 2), 0);
  return o;
}

Occupations Occupations::of_state(const FockBasis& basis, std::size_t state) {
  Occupations o = vacuum(basis.dim());
  const auto occ = basis.occupations(state);
  for (std::size_t m = 0; m < occ.size(); ++m) {
    const ModeId& id = basis.modes()[m];
    if (id.is_vector()) {
      o.vector_n[static_cast<std::size_t>(id.i - 1)] = occ[m];
    } else {
      o.tensor(id.i, id.j) = occ[m];
    }
  }
  return o;
}

int Occupations::n(int i, int j) const {
  if (i == j) return 0;
  if (i > j) std::swap(i, j);
  return tensor_n.at(pair_pos(i, j, dim()));
}

int& Occupations::tensor(int i, int j) {
  if (i == j) throw ValidationError("tensor occupation: n_ii does not exist");
  if (i > j) std::swap(i, j);
  return tensor_n.at(pair_pos(i, j, dim()));
}

int Occupations::total() const {
  return std::accumulate(vector_n.begin(), vector_n.end(), 0) + std::accumulate(tensor_n.begin(), tensor_n.end(), 0);
}

void Occupations::validate() const {
  const int d = dim();
  if (d < 2) throw ValidationError("occupations: dimension must be >= 2");
  if (tensor_n.size() != static_cast<std::size_t>(d * (d - 1) / 2)) {
    throw ValidationError("occupations: expected " + std::to_string(d * (d - 1) / 2) + " tensor entries");
  }
  for (int v : vector_n)
    if (v < 0) throw ValidationError("occupations: negative vector occupation");
  for (int v : tensor_n)
    if (v < 0) throw ValidationError("occupations: negative tensor occupation");
}

int UnifiedOccupations::n(int mu, int nu) const {
  if (mu == nu) return 0;
  if (mu > nu) std::swap(mu, nu);
  return pair_n.at(pair_pos(mu, nu, top));
}

UnifiedOccupations to_unified(const Occupations& occ) {
  occ.validate();
  const int d = occ.dim();
  UnifiedOccupations u;
  u.top = d + 1;
  for (int mu = 1; mu <= u.top; ++mu) {
    for (int nu = mu + 1; nu <= u.top; ++nu) {
      u.pair_n.push_back(nu == u.top ? occ.n(mu) : occ.n(mu, nu));
    }
  }
  return u;
}

double covariant_free(const UnifiedOccupations& occ, const ModelParams& params) {
  const int d = occ.top - 1;
  double sum = 0;
  for (int mu = 1; mu <= occ.top; ++mu)
    for (int nu = 1; nu <= occ.top; ++nu) sum += occ.n(mu, nu);
  return params.omega / 2.0 * (sum + d * (d + 1) / 2.0);
}

double covariant_correction(const UnifiedOccupations& occ, const ModelParams& params) {
  const int d = occ.top - 1;
  double quad = 0;
  double lin = 0;
  for (int mu = 1; mu <= occ.top; ++mu) {
    for (int nu = 1; nu <= occ.top; ++nu) {
      if (mu == nu) continue;
      lin += occ.n(mu, nu);
      for (int rho = 1; rho <= occ.top; ++rho) quad += double(occ.n(mu, rho)) * occ.n(nu, rho);
    }
  }
  const double pre = params.lambda * params.lambda * params.beta * params.beta * params.vector_mass() *
                     params.omega * params.omega / 8.0;
  return pre * (quad + (d - 1) * lin);
}

double closed_form(FormulaId id, const Occupations& occ, const ModelParams& params) {
  params.validate();
  occ.validate();
  if (occ.dim() != params.dim) throw ValidationError("occupations: dimension does not match d");

  const double d = params.dim;
  const double w = params.omega;
  const double big_w = params.omega_tensor;
  const double w2 = w * w;
  const double t2 = big_w * big_w;
  const double lam2 = params.lambda * params.lambda;
  const double pre = lam2 * params.beta * params.beta * params.vector_mass() / 8.0;
  const SplitSums s(occ);

  switch (id) {
    case FormulaId::CovariantFree: return covariant_free(to_unified(occ), params);
    case FormulaId::CovariantCorrection: return covariant_correction(to_unified(occ), params);
    case FormulaId::SplitFree: return w * (s.vector_total + 0.5 * s.tensor_total + d * (d + 1) / 4.0);
    case FormulaId::SplitCorrection:
      return pre * w2 *
             (s.tensor_tensor + s.vector_vector + 2.0 * s.vector_tensor +
              (d - 1) * (s.tensor_total + 2.0 * s.vector_total));
    case FormulaId::TwoFrequencyFree:
      return w * (s.vector_total + d / 2.0) + big_w / 2.0 * (s.tensor_total + d * (d - 1) / 2.0);
    case FormulaId::TwoFrequencyWeylCorrection:
      return pre * (t2 * (s.tensor_tensor + s.vector_vector) + 2.0 * w2 * s.vector_tensor +
                    (d - 1) * (t2 + w2) * s.vector_total + ((d - 2) * t2 + w2) * s.tensor_total);
    case FormulaId::TensorGroundApproximation:
      return w * s.vector_total + d * w / 2.0 + d * (d - 1) * big_w / 4.0 +
             pre * (2.0 * (d - 1) * (w2 + t2) * s.vector_total + t2 * s.vector_vector);
    case FormulaId::TwoFrequencyClassicalCorrection:
      return pre * (t2 * (s.tensor_tensor + 4.0 * s.vector_vector) + w2 * (s.vector_tensor + d * (d - 1) / 4.0) +
                    (d - 1) * (4.0 * t2 + w2 / 2.0) * s.vector_total + ((d - 2) * t2 + w2 / 2.0) * s.tensor_total);
    case FormulaId::MoyalEnergy: {
      const double free = closed_form(FormulaId::TwoFrequencyFree, occ, params);
      return free + lam2 * params.vector_mass() * w2 / 8.0 *
                        (s.vector_tensor + (d - 1) / 2.0 * s.vector_total + 0.5 * s.tensor_total +
                         d * (d - 1) / 4.0);
    }
  }
  throw StructuralError("unhandled formula");
}

}  // namespace extsnyder
