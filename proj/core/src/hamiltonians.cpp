#include "extsnyder/hamiltonians.hpp"

#include <algorithm>
#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

constexpr ModelKind kAllModels[] = {ModelKind::CovariantExtended, ModelKind::SplitEqualFrequency,
                                    ModelKind::SplitTwoFrequencyWeyl, ModelKind::SplitTwoFrequencyClassical,
                                    ModelKind::MoyalDynamic};

// Square table of operators indexed 1..n in both slots.
class Table {
 public:
  Table(int n, const Operator& zero) : n_(n), ops_(static_cast<std::size_t>(n * n), zero) {}
  Operator& operator()(int a, int b) { return ops_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))]; }
  const Operator& operator()(int a, int b) const {
    return ops_[static_cast<std::size_t>((a - 1) * n_ + (b - 1))];
  }

 private:
  int n_;
  std::vector<Operator> ops_;
};

// Sum_{a,b} L(a,b) (R(a,b) - R(b,a)).
Operator antisymmetric_contraction(const Table& left, const Table& right, int n, const Operator& zero) {
  Operator out = zero;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) out += left(a, b) * (right(a, b) - right(b, a));
  return out;
}

// Building blocks of the split potentials, all in verbatim product order.
struct SplitBlocks {
  Table c;  // x_i p_j
  Table C;  // sum_k x_ik p_jk
  Table E;  // sum_k p_ik x_jk
  std::vector<Operator> u;  // sum_j x_ij p_j
  std::vector<Operator> w;  // sum_j x_j p_ij

  explicit SplitBlocks(const PhaseSpace& ps) : c(ps.dim(), ps.zero()), C(ps.dim(), ps.zero()), E(ps.dim(), ps.zero()) {
    const int d = ps.dim();
    for (int i = 1; i <= d; ++i) {
      Operator ui = ps.zero();
      Operator wi = ps.zero();
      for (int j = 1; j <= d; ++j) {
        c(i, j) = ps.x(i) * ps.p(j);
        if (j != i) {
          ui += ps.x(i, j) * ps.p(j);
          wi += ps.x(j) * ps.p(i, j);
        }
        for (int k = 1; k <= d; ++k) {
          if (k == i || k == j) continue;
          C(i, j) += ps.x(i, k) * ps.p(j, k);
          E(i, j) += ps.p(i, k) * ps.x(j, k);
        }
      }
      u.push_back(std::move(ui));
      w.push_back(std::move(wi));
    }
  }
};

// sum_{ij} x_i p_j (x_i p_j - x_j p_i)
Operator vector_square(const SplitBlocks& b, const PhaseSpace& ps) {
  return antisymmetric_contraction(b.c, b.c, ps.dim(), ps.zero());
}
// sum_{ijkh} x_ik p_jk (x_ih p_jh - x_jh p_ih)
Operator tensor_square(const SplitBlocks& b, const PhaseSpace& ps) {
  return antisymmetric_contraction(b.C, b.C, ps.dim(), ps.zero());
}
// sum_{ijk} x_i p_j (x_ik p_jk - x_jk p_ik)
Operator vector_tensor_cross(const SplitBlocks& b, const PhaseSpace& ps) {
  return antisymmetric_contraction(b.c, b.C, ps.dim(), ps.zero());
}
// sum_i (sum_j x_ij p_j)^2
Operator tensor_drag(const SplitBlocks& b, const PhaseSpace& ps) {
  Operator out = ps.zero();
  for (const auto& ui : b.u) out += ui * ui;
  return out;
}

// sum_{ijk} (beta^2 x_ij p_j x_ik p_k + beta^-2 x_j p_ij x_k p_ik - x_i p_j p_ik x_jk - p_i x_j x_ik p_jk)
Operator mixed_frequency_terms(const SplitBlocks& b, const PhaseSpace& ps) {
  const int d = ps.dim();
  const double b2 = ps.beta() * ps.beta();
  Operator out = b2 * tensor_drag(b, ps);
  for (const auto& wi : b.w) out += (1.0 / b2) * (wi * wi);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      out -= b.c(i, j) * b.E(i, j);
      out -= (ps.p(i) * ps.x(j)) * b.C(i, j);
    }
  }
  return out;
}

Operator covariant_potential(const PhaseSpace& ps, const ModelParams& params) {
  const int top = ps.dim() + 1;
  Table a(top, ps.zero());
  for (int mu = 1; mu <= top; ++mu) {
    for (int nu = 1; nu <= top; ++nu) {
      for (int rho = 1; rho <= top; ++rho) {
        if (rho == mu || rho == nu) continue;
        a(mu, nu) += ps.unified_x(mu, rho) * ps.unified_p(nu, rho);
      }
    }
  }
  const double scale = params.tensor_mass * params.omega * params.omega / 8.0;
  return scale * antisymmetric_contraction(a, a, top, ps.zero());
}

Operator raw_potential(const PhaseSpace& ps, const ModelParams& params, ModelKind model) {
  if (model == ModelKind::CovariantExtended) return covariant_potential(ps, params);

  const SplitBlocks b(ps);
  const double w2 = params.omega * params.omega;
  const double t2 = params.omega_tensor * params.omega_tensor;
  const double big_m = params.tensor_mass;
  switch (model) {
    case ModelKind::SplitEqualFrequency:
      return (big_m * w2 / 8.0) * (vector_square(b, ps) + tensor_square(b, ps) +
                                   2.0 * vector_tensor_cross(b, ps) + mixed_frequency_terms(b, ps));
    case ModelKind::SplitTwoFrequencyWeyl:
      return (big_m * w2 / 8.0) * mixed_frequency_terms(b, ps) +
             (big_m * t2 / 8.0) * (vector_square(b, ps) + tensor_square(b, ps) + 2.0 * vector_tensor_cross(b, ps));
    case ModelKind::SplitTwoFrequencyClassical:
      return (big_m * w2 / 8.0) * (ps.beta() * ps.beta()) * tensor_drag(b, ps) +
             (big_m * t2 / 8.0) *
                 (4.0 * vector_square(b, ps) + tensor_square(b, ps) + 4.0 * vector_tensor_cross(b, ps));
    case ModelKind::MoyalDynamic:
      return (params.vector_mass() * w2 / 8.0) * tensor_drag(b, ps);
    case ModelKind::CovariantExtended:
      break;
  }
  throw StructuralError("unhandled model");
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::CovariantExtended: return "covariant_extended";
    case ModelKind::SplitEqualFrequency: return "split_equal_frequency";
    case ModelKind::SplitTwoFrequencyWeyl: return "split_two_frequency_weyl";
    case ModelKind::SplitTwoFrequencyClassical: return "split_two_frequency_classical";
    case ModelKind::MoyalDynamic: return "moyal_dynamic";
  }
  return "unknown";
}

ModelKind parse_model(std::string_view name) {
  for (auto k : kAllModels) {
    if (name == to_string(k)) return k;
  }
  throw ValidationError("model: unknown kind '" + std::string(name) +
                        "' (expected covariant_extended, split_equal_frequency, split_two_frequency_weyl, "
                        "split_two_frequency_classical or moyal_dynamic)");
}

double tensor_frequency(ModelKind model, const ModelParams& params) {
  switch (model) {
    case ModelKind::CovariantExtended:
    case ModelKind::SplitEqualFrequency: return params.omega;
    default: return params.omega_tensor;
  }
}

RealizationKind default_realization(ModelKind model) {
  switch (model) {
    case ModelKind::CovariantExtended: return RealizationKind::WeylUnified;
    case ModelKind::SplitTwoFrequencyClassical: return RealizationKind::Classical;
    case ModelKind::MoyalDynamic: return RealizationKind::MoyalDynamical;
    default: return RealizationKind::Weyl;
  }
}

void require_consistent(ModelKind model, RealizationKind realization) {
  const RealizationKind want = default_realization(model);
  const bool weyl_family = want == RealizationKind::Weyl || want == RealizationKind::WeylUnified;
  const bool ok = realization == want ||
                  (weyl_family && (realization == RealizationKind::Weyl || realization == RealizationKind::WeylUnified));
  if (!ok) {
    throw ValidationError("realization: '" + std::string(to_string(realization)) + "' does not generate model '" +
                          std::string(to_string(model)) + "' (expected '" + std::string(to_string(want)) + "')");
  }
}

std::shared_ptr<const PhaseSpace> model_phase_space(const BasisPtr& basis, const ModelParams& params,
                                                    ModelKind model) {
  return std::make_shared<const PhaseSpace>(
      PhaseSpace::for_model(basis, params, tensor_frequency(model, params)));
}

Operator build_free(const BasisPtr& basis, const ModelParams& params, ModelKind model) {
  params.validate();
  const int d = params.dim;
  const double wt = tensor_frequency(model, params);
  const double zero_point = params.omega * d / 2.0 + wt * d * (d - 1) / 4.0;
  Eigen::VectorXd values(static_cast<Eigen::Index>(basis->dimension()));
  for (std::size_t s = 0; s < basis->dimension(); ++s) {
    double e = zero_point;
    for (std::size_t m = 0; m < basis->mode_count(); ++m) {
      e += (basis->modes()[m].is_vector() ? params.omega : wt) * basis->occupation(s, m);
    }
    values[static_cast<Eigen::Index>(s)] = e;
  }
  return Operator::diagonal(basis, values);
}

HamiltonianParts build_parts(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                             RealizationKind realization) {
  params.validate();
  require_consistent(model, realization);
  const auto ps = model_phase_space(basis, params, model);
  const Operator raw = raw_potential(*ps, params, model);
  return HamiltonianParts{model, build_free(basis, params, model), raw.hermitian_part(), raw.hermiticity_defect()};
}

Operator build_interaction(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                           RealizationKind realization) {
  return build_parts(basis, params, model, realization).v;
}

Operator covariant_number_form(const BasisPtr& basis, const ModelParams& params) {
  params.validate();
  const int d = params.dim;
  const int top = d + 1;
  const Operator zero = Operator::zero(basis);
  // N over unified pairs; N(mu, D+1) is the vector number operator.
  Table n(top, zero);
  for (int mu = 1; mu <= top; ++mu) {
    for (int nu = 1; nu <= top; ++nu) {
      if (mu == nu) continue;
      const int a = std::min(mu, nu);
      const int b = std::max(mu, nu);
      n(mu, nu) = number_op(basis, b == top ? ModeId::vector(a) : ModeId::tensor(a, b));
    }
  }
  Operator quad = zero;
  Operator lin = zero;
  for (int mu = 1; mu <= top; ++mu) {
    for (int nu = 1; nu <= top; ++nu) {
      if (mu == nu) continue;
      lin += n(mu, nu);
      for (int rho = 1; rho <= top; ++rho) quad += n(mu, rho) * n(nu, rho);
    }
  }
  const double scale = params.tensor_mass * params.omega * params.omega / 8.0;
  return scale * (quad + static_cast<double>(d - 1) * lin);
}

Operator build_from_realization(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                                RealizationKind realization) {
  params.validate();
  require_consistent(model, realization);
  const auto ps = model_phase_space(basis, params, model);
  const RealizedOps ops = realize(ps, params, realization);
  const int d = params.dim;
  const double m = params.vector_mass();
  const double big_m = params.tensor_mass;
  const double w = params.omega;
  const double wt = tensor_frequency(model, params);

  Operator h = ps->zero();
  for (int i = 1; i <= d; ++i) {
    h += (1.0 / (2.0 * m)) * (ops.p(i) * ops.p(i));
    h += (m * w * w / 2.0) * (ops.x(i) * ops.x(i));
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      const Operator pij = ops.p(i, j);
      const Operator xij = ops.x(i, j);
      h += (1.0 / (2.0 * big_m)) * (pij * pij);
      h += (big_m * wt * wt / 2.0) * (xij * xij);
    }
  }
  return h;
}

Operator order_lambda_part(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                           RealizationKind realization) {
  if (params.lambda == 0.0) throw ValidationError("lambda: order extraction needs a nonzero probe lambda");
  ModelParams minus = params;
  minus.lambda = -params.lambda;
  const Operator hp = build_from_realization(basis, params, model, realization);
  const Operator hm = build_from_realization(basis, minus, model, realization);
  return (1.0 / (2.0 * params.lambda)) * (hp - hm);
}

Operator order_lambda_squared_part(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                                   RealizationKind realization) {
  if (params.lambda == 0.0) throw ValidationError("lambda: order extraction needs a nonzero probe lambda");
  ModelParams minus = params;
  minus.lambda = -params.lambda;
  ModelParams zero = params;
  zero.lambda = 0.0;
  const Operator hp = build_from_realization(basis, params, model, realization);
  const Operator hm = build_from_realization(basis, minus, model, realization);
  const Operator h0 = build_from_realization(basis, zero, model, realization);
  return (1.0 / (2.0 * params.lambda * params.lambda)) * (hp + hm - 2.0 * h0);
}

}  // namespace extsnyder
