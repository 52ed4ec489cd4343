#include "extsnyder/phase_space.hpp"

#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

PhaseSpace::PhaseSpace(BasisPtr basis, SectorScales scales, double beta)
    : basis_(std::move(basis)), scales_(scales), beta_(beta), zero_(Operator::zero(basis_)) {
  if (!(beta > 0.0)) throw ValidationError("beta: must be > 0 to build vector modes");
  for (const ModeId& mode : basis_->modes()) {
    const bool vec = mode.is_vector();
    auto pair = canonical_pair(basis_, mode, vec ? scales.vector_mass : scales.tensor_mass,
                               vec ? scales.vector_freq : scales.tensor_freq);
    auto& xs = vec ? x_vec_ : x_ten_;
    auto& ps = vec ? p_vec_ : p_ten_;
    xs.push_back(std::move(pair.x));
    ps.push_back(std::move(pair.p));
  }
}

PhaseSpace PhaseSpace::for_model(BasisPtr basis, const ModelParams& params, double tensor_freq) {
  SectorScales s{params.vector_mass(), params.omega, params.tensor_mass, tensor_freq};
  return PhaseSpace(std::move(basis), s, params.beta);
}

const Operator& PhaseSpace::x(int i) const { return x_vec_.at(basis_->vector_mode(i)); }
const Operator& PhaseSpace::p(int i) const { return p_vec_.at(basis_->vector_mode(i)); }

Operator PhaseSpace::signed_tensor(const std::vector<Operator>& ops, int i, int j) const {
  const auto slot = basis_->tensor_slot(i, j);
  if (slot.sign == 0) return zero_;
  const Operator& op = ops[slot.mode - static_cast<std::size_t>(dim())];
  return slot.sign > 0 ? op : -op;
}

Operator PhaseSpace::x(int i, int j) const { return signed_tensor(x_ten_, i, j); }
Operator PhaseSpace::p(int i, int j) const { return signed_tensor(p_ten_, i, j); }

Operator PhaseSpace::unified_x(int mu, int nu) const {
  const int top = dim() + 1;
  if (mu < 1 || mu > top || nu < 1 || nu > top) {
    throw StructuralError("unified index out of range: (" + std::to_string(mu) + "," +
                          std::to_string(nu) + ")");
  }
  if (mu == nu) return zero_;
  if (nu == top) return x(mu) * (1.0 / beta_);
  if (mu == top) return x(nu) * (-1.0 / beta_);
  return x(mu, nu);
}

Operator PhaseSpace::unified_p(int mu, int nu) const {
  const int top = dim() + 1;
  if (mu < 1 || mu > top || nu < 1 || nu > top) {
    throw StructuralError("unified index out of range: (" + std::to_string(mu) + "," +
                          std::to_string(nu) + ")");
  }
  if (mu == nu) return zero_;
  if (nu == top) return p(mu) * beta_;
  if (mu == top) return p(nu) * (-beta_);
  return p(mu, nu);
}

}  // namespace extsnyder
