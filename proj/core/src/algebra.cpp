#include "extsnyder/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "extsnyder/convergence.hpp"
#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

constexpr Complex kI{0.0, 1.0};

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

struct Context {
  const RealizedOps& ops;
  const ModelParams& params;
  int margin;
  int d;
  double lambda;
  double beta2;
};

using Check = std::function<double(const Context&)>;

struct RelationDef {
  std::string id;
  std::string group;
  Expectation expected;
  Check check;
};

double resid(const Operator& a, const Context& c) { return interior_residual_norm(a, c.margin); }

// Loops over ordered pairs i<j.
template <typename F>
void for_pairs(int n, F&& f) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) f(i, j);
}

// ---- coordinate algebra, shared by the Weyl and classical realizations ----

double vector_vector(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    const Operator lhs = commutator(c.ops.x(i), c.ops.x(j));
    r = std::max(r, resid(lhs - (kI * c.lambda * c.beta2) * c.ops.x(i, j), c));
  });
  return r;
}

double tensor_vector(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    for (int k = 1; k <= c.d; ++k) {
      const Operator lhs = commutator(c.ops.x(i, j), c.ops.x(k));
      const Operator rhs = (kI * c.lambda) * (delta(i, k) * c.ops.x(j) - delta(j, k) * c.ops.x(i));
      r = std::max(r, resid(lhs - rhs, c));
    }
  });
  return r;
}

double tensor_tensor(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    for_pairs(c.d, [&](int k, int l) {
      const Operator lhs = commutator(c.ops.x(i, j), c.ops.x(k, l));
      const Operator rhs = (kI * c.lambda) * (delta(i, k) * c.ops.x(j, l) - delta(i, l) * c.ops.x(j, k) -
                                              delta(j, k) * c.ops.x(i, l) + delta(j, l) * c.ops.x(i, k));
      r = std::max(r, resid(lhs - rhs, c));
    });
  });
  return r;
}

// ---- momenta ----

double momentum_vector_vector(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) { r = std::max(r, resid(commutator(c.ops.p(i), c.ops.p(j)), c)); });
  return r;
}

double momentum_tensor_tensor(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    for_pairs(c.d, [&](int k, int l) {
      r = std::max(r, resid(commutator(c.ops.p(i, j), c.ops.p(k, l)), c));
    });
  });
  return r;
}

double momentum_vector_tensor(const Context& c) {
  double r = 0.0;
  for (int i = 1; i <= c.d; ++i)
    for_pairs(c.d, [&](int j, int k) { r = std::max(r, resid(commutator(c.ops.p(i), c.ops.p(j, k)), c)); });
  return r;
}

// ---- mixed coordinate/momentum relations ----

// [x_i, p_jk] = i (lambda beta^2 / 2) (d_ik p_j - d_ij p_k)
double vector_tensor_momentum(const Context& c) {
  double r = 0.0;
  for (int i = 1; i <= c.d; ++i) {
    for_pairs(c.d, [&](int j, int k) {
      const Operator lhs = commutator(c.ops.x(i), c.ops.p(j, k));
      const Operator rhs = (kI * c.lambda * c.beta2 / 2.0) * (delta(i, k) * c.ops.p(j) - delta(i, j) * c.ops.p(k));
      r = std::max(r, resid(lhs - rhs, c));
    });
  }
  return r;
}

// [x_i, p_j] = i (d_ij + tensor_weight * lambda * p_ij)
Check vector_momentum(double tensor_weight) {
  return [tensor_weight](const Context& c) {
    double r = 0.0;
    for (int i = 1; i <= c.d; ++i) {
      for (int j = 1; j <= c.d; ++j) {
        const Operator lhs = commutator(c.ops.x(i), c.ops.p(j));
        Operator rhs = kI * delta(i, j) * Operator::identity(c.ops.canonical().basis());
        if (tensor_weight != 0.0) rhs += (kI * tensor_weight * c.lambda) * c.ops.p(i, j);
        r = std::max(r, resid(lhs - rhs, c));
      }
    }
    return r;
  };
}

// [x_ij, p_k] = i weight * lambda (d_ik p_j - d_jk p_i)
Check tensor_vector_momentum(double weight) {
  return [weight](const Context& c) {
    double r = 0.0;
    for_pairs(c.d, [&](int i, int j) {
      for (int k = 1; k <= c.d; ++k) {
        const Operator lhs = commutator(c.ops.x(i, j), c.ops.p(k));
        const Operator rhs = (kI * weight * c.lambda) * (delta(i, k) * c.ops.p(j) - delta(j, k) * c.ops.p(i));
        r = std::max(r, resid(lhs - rhs, c));
      }
    });
    return r;
  };
}

// [x_ij, p_kl] = i (d_ik d_jl - d_il d_jk) + i weight * lambda (d_ik p_jl - d_il p_jk - d_jk p_il + d_jl p_ik)
Check tensor_tensor_momentum(double weight) {
  return [weight](const Context& c) {
    double r = 0.0;
    const Operator id = Operator::identity(c.ops.canonical().basis());
    for_pairs(c.d, [&](int i, int j) {
      for_pairs(c.d, [&](int k, int l) {
        const Operator lhs = commutator(c.ops.x(i, j), c.ops.p(k, l));
        Operator rhs = (kI * (delta(i, k) * delta(j, l) - delta(i, l) * delta(j, k))) * id;
        if (weight != 0.0) {
          rhs += (kI * weight * c.lambda) * (delta(i, k) * c.ops.p(j, l) - delta(i, l) * c.ops.p(j, k) -
                                             delta(j, k) * c.ops.p(i, l) + delta(j, l) * c.ops.p(i, k));
        }
        r = std::max(r, resid(lhs - rhs, c));
      });
    });
    return r;
  };
}

// ---- Moyal-specific ----

double moyal_vector_vector(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    const Operator lhs = commutator(c.ops.x(i), c.ops.x(j));
    r = std::max(r, resid(lhs - (kI * c.lambda) * c.ops.x(i, j), c));
  });
  return r;
}

// [x_i, p_kl] = -i (lambda/2) (d_ik p_l - d_il p_k)
double moyal_vector_tensor_momentum(const Context& c) {
  double r = 0.0;
  for (int i = 1; i <= c.d; ++i) {
    for_pairs(c.d, [&](int k, int l) {
      const Operator lhs = commutator(c.ops.x(i), c.ops.p(k, l));
      const Operator rhs = (-kI * c.lambda / 2.0) * (delta(i, k) * c.ops.p(l) - delta(i, l) * c.ops.p(k));
      r = std::max(r, resid(lhs - rhs, c));
    });
  }
  return r;
}

double moyal_vector_tensor(const Context& c) {
  double r = 0.0;
  for (int i = 1; i <= c.d; ++i)
    for_pairs(c.d, [&](int j, int k) { r = std::max(r, resid(commutator(c.ops.x(i), c.ops.x(j, k)), c)); });
  return r;
}

double moyal_tensor_tensor(const Context& c) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    for_pairs(c.d, [&](int k, int l) { r = std::max(r, resid(commutator(c.ops.x(i, j), c.ops.x(k, l)), c)); });
  });
  return r;
}

double moyal_momentum_tensor(const Context& c) {
  double r = 0.0;
  for (int i = 1; i <= c.d; ++i)
    for_pairs(c.d, [&](int j, int k) { r = std::max(r, resid(commutator(c.ops.p(i), c.ops.x(j, k)), c)); });
  return r;
}

// ---- rotation covariance ----

double rotation_vector(const Context& c, bool momenta) {
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    const Operator m = c.ops.rotation(i, j);
    for (int k = 1; k <= c.d; ++k) {
      const Operator& target = momenta ? c.ops.p(k) : c.ops.x(k);
      const Operator lhs = commutator(m, target);
      const Operator rhs = momenta ? kI * (delta(i, k) * c.ops.p(j) - delta(j, k) * c.ops.p(i))
                                   : kI * (delta(i, k) * c.ops.x(j) - delta(j, k) * c.ops.x(i));
      r = std::max(r, resid(lhs - rhs, c));
    }
  });
  return r;
}

double rotation_tensor(const Context& c, bool momenta) {
  auto t = [&](int a, int b) { return momenta ? c.ops.p(a, b) : c.ops.x(a, b); };
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    const Operator m = c.ops.rotation(i, j);
    for_pairs(c.d, [&](int k, int l) {
      const Operator lhs = commutator(m, t(k, l));
      const Operator rhs = kI * (delta(i, k) * t(j, l) - delta(i, l) * t(j, k) - delta(j, k) * t(i, l) +
                                 delta(j, l) * t(i, k));
      r = std::max(r, resid(lhs - rhs, c));
    });
  });
  return r;
}

double rotation_closure(const Context& c) {
  auto m = [&](int a, int b) { return c.ops.rotation(a, b); };
  double r = 0.0;
  for_pairs(c.d, [&](int i, int j) {
    for_pairs(c.d, [&](int k, int l) {
      const Operator lhs = commutator(m(i, j), m(k, l));
      const Operator rhs = kI * (delta(i, k) * m(j, l) - delta(i, l) * m(j, k) - delta(j, k) * m(i, l) +
                                 delta(j, l) * m(i, k));
      r = std::max(r, resid(lhs - rhs, c));
    });
  });
  return r;
}

double jacobi(const Context& c) {
  const Operator& a = c.ops.x(1);
  const Operator& b = c.ops.x(2);
  const Operator& p = c.ops.p(1);
  const Operator sum = commutator(a, commutator(b, p)) + commutator(b, commutator(p, a)) +
                       commutator(p, commutator(a, b));
  return resid(sum, c);
}

// ---- unified (D+1 index) form ----

double unified_algebra(const Context& c) {
  const int top = c.d + 1;
  auto x = [&](int a, int b) { return c.ops.unified_x(a, b); };
  double r = 0.0;
  for_pairs(top, [&](int m, int n) {
    for_pairs(top, [&](int rr, int s) {
      const Operator lhs = commutator(x(m, n), x(rr, s));
      const Operator rhs = (kI * c.lambda) * (delta(m, rr) * x(n, s) - delta(m, s) * x(n, rr) -
                                              delta(n, rr) * x(m, s) + delta(n, s) * x(m, rr));
      r = std::max(r, resid(lhs - rhs, c));
    });
  });
  return r;
}

double unified_matches_components(const Context& c) {
  ModelParams p = c.params;
  p.lambda = c.lambda;
  const RealizedOps comp = realize(c.ops.canonical_ptr(), p, RealizationKind::Weyl);
  double r = 0.0;
  for (int i = 1; i <= c.d; ++i) r = std::max(r, resid(c.ops.x(i) - comp.x(i), c));
  for_pairs(c.d, [&](int i, int j) { r = std::max(r, resid(c.ops.x(i, j) - comp.x(i, j), c)); });
  return r;
}

std::vector<RelationDef> relations_for(RealizationKind kind) {
  using E = Expectation;
  std::vector<RelationDef> defs;
  auto add = [&](std::string id, std::string group, E e, Check f) {
    defs.push_back({std::move(id), std::move(group), e, std::move(f)});
  };

  const bool moyal = kind == RealizationKind::MoyalDynamical;
  const bool classical = kind == RealizationKind::Classical;

  if (moyal) {
    add("[x_i,x_j] = i lambda x_ij", "coordinates", E::Exact, moyal_vector_vector);
    add("[x_i,x_jk] = 0", "coordinates", E::Exact, moyal_vector_tensor);
    add("[x_ij,x_kl] = 0", "coordinates", E::Exact, moyal_tensor_tensor);
  } else {
    add("[x_i,x_j] = i lambda beta^2 x_ij", "coordinates", E::SecondOrder, vector_vector);
    add("[x_ij,x_k] = i lambda (d_ik x_j - d_jk x_i)", "coordinates", E::SecondOrder, tensor_vector);
    add("[x_ij,x_kl] = i lambda (d_ik x_jl - d_il x_jk - d_jk x_il + d_jl x_ik)", "coordinates",
        E::SecondOrder, tensor_tensor);
  }

  add("[p_i,p_j] = 0", "momenta", E::Exact, momentum_vector_vector);
  add("[p_ij,p_kl] = 0", "momenta", E::Exact, momentum_tensor_tensor);
  add("[p_i,p_jk] = 0", "momenta", E::Exact, momentum_vector_tensor);

  if (moyal) {
    add("[x_i,p_j] = i d_ij", "mixed", E::Exact, vector_momentum(0.0));
    add("[x_i,p_kl] = -i lambda/2 (d_ik p_l - d_il p_k)", "mixed", E::Exact, moyal_vector_tensor_momentum);
    add("[x_ij,p_kl] = i (d_ik d_jl - d_il d_jk)", "mixed", E::Exact, tensor_tensor_momentum(0.0));
    add("[x_ij,p_k] = 0", "mixed", E::Exact, tensor_vector_momentum(0.0));
    add("[p_i,x_jk] = 0", "mixed", E::Exact, moyal_momentum_tensor);
  } else {
    add("[x_i,p_jk] = i lambda beta^2/2 (d_ik p_j - d_ij p_k)", "mixed", E::Exact, vector_tensor_momentum);
    if (classical) {
      add("[x_i,p_j] = i d_ij", "mixed", E::Exact, vector_momentum(0.0));
      add("[x_ij,p_k] = i lambda (d_ik p_j - d_jk p_i)", "mixed", E::Exact, tensor_vector_momentum(1.0));
    } else {
      add("[x_i,p_j] = i (d_ij + lambda/2 p_ij)", "mixed", E::Exact, vector_momentum(0.5));
      add("[x_ij,p_k] = i lambda/2 (d_ik p_j - d_jk p_i)", "mixed", E::Exact, tensor_vector_momentum(0.5));
    }
    add("[x_ij,p_kl] = i (d_ik d_jl - d_il d_jk) + i lambda/2 (d_ik p_jl - d_il p_jk - d_jk p_il + d_jl p_ik)",
        "mixed", E::Exact, tensor_tensor_momentum(0.5));
  }

  add("[M_ij,x_k] = i (d_ik x_j - d_jk x_i)", "covariance", E::Exact,
      [](const Context& c) { return rotation_vector(c, false); });
  add("[M_ij,x_kl] = i (d_ik x_jl - d_il x_jk - d_jk x_il + d_jl x_ik)", "covariance", E::Exact,
      [](const Context& c) { return rotation_tensor(c, false); });
  add("[M_ij,p_k] = i (d_ik p_j - d_jk p_i)", "covariance", E::Exact,
      [](const Context& c) { return rotation_vector(c, true); });
  add("[M_ij,p_kl] = i (d_ik p_jl - d_il p_jk - d_jk p_il + d_jl p_ik)", "covariance", E::Exact,
      [](const Context& c) { return rotation_tensor(c, true); });
  add("[M_ij,M_kl] = i (d_ik M_jl - d_il M_jk - d_jk M_il + d_jl M_ik)", "covariance", E::Exact,
      rotation_closure);
  add("jacobi(x_1,x_2,p_1) = 0", "jacobi", E::Exact, jacobi);

  if (kind == RealizationKind::WeylUnified) {
    add("[X_mn,X_rs] = i lambda (d_mr X_ns - d_ms X_nr - d_nr X_ms + d_ns X_mr)", "unified", E::SecondOrder,
        unified_algebra);
    add("unified coordinates match component coordinates", "unified", E::Exact, unified_matches_components);
  }
  return defs;
}

}  // namespace

std::string_view to_string(Expectation e) {
  return e == Expectation::Exact ? "exact" : "order 2";
}

std::vector<RelationResidual> relation_residuals(const RealizedOps& ops, const ModelParams& params, int margin) {
  const Context ctx{ops, params, margin, ops.dim(), ops.lambda(), params.beta * params.beta};
  // Validates the margin once up front.
  (void)interior_mask(*ops.canonical().basis(), margin);
  std::vector<RelationResidual> out;
  for (const auto& def : relations_for(ops.kind())) {
    out.push_back({def.id, def.group, def.expected, def.check(ctx)});
  }
  return out;
}

bool AlgebraReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationReport& r) { return r.pass; });
}

const RelationReport& AlgebraReport::find(std::string_view id) const {
  for (const auto& r : relations)
    if (r.id == id) return r;
  throw StructuralError("no relation with id '" + std::string(id) + "'");
}

AlgebraReport algebra_report(const BasisPtr& basis, const ModelParams& params, RealizationKind kind,
                             std::span<const double> lambdas, int margin, const AlgebraTolerances& tolerances,
                             RealizeOptions options) {
  if (lambdas.empty()) throw ValidationError("lambda_sweep: at least one lambda sample is required");
  const double tensor_freq = params.omega_tensor;
  auto canonical = std::make_shared<const PhaseSpace>(PhaseSpace::for_model(basis, params, tensor_freq));

  AlgebraReport report;
  report.kind = kind;
  report.margin = margin;
  report.lambdas.assign(lambdas.begin(), lambdas.end());

  for (double lam : lambdas) {
    ModelParams p = params;
    p.lambda = lam;
    const RealizedOps ops = realize(canonical, p, kind, options);
    const auto residuals = relation_residuals(ops, p, margin);
    if (report.relations.empty()) {
      for (const auto& r : residuals) {
        RelationReport rr;
        rr.id = r.id;
        rr.group = r.group;
        rr.expected = r.expected;
        rr.margin = margin;
        report.relations.push_back(std::move(rr));
      }
    }
    for (std::size_t k = 0; k < residuals.size(); ++k) {
      report.relations[k].lambdas.push_back(lam);
      report.relations[k].residuals.push_back(residuals[k].residual);
    }
  }

  for (auto& rel : report.relations) {
    rel.exact = std::all_of(rel.residuals.begin(), rel.residuals.end(),
                            [&](double r) { return r <= tolerances.exact; });
    if (rel.exact) {
      rel.pass = true;
      continue;
    }
    if (rel.expected == Expectation::Exact) {
      rel.pass = false;
      continue;
    }
    std::vector<ConvergenceSample> samples;
    for (std::size_t k = 0; k < rel.lambdas.size(); ++k) {
      if (rel.lambdas[k] > 0.0) samples.push_back({rel.lambdas[k], rel.residuals[k]});
    }
    if (samples.size() < 3) {
      throw ValidationError("lambda_sweep: relation '" + rel.id +
                            "' is not exact and needs >= 3 positive lambda samples for an order fit");
    }
    rel.fitted_order = convergence_fit(samples);
    rel.pass = std::abs(*rel.fitted_order - tolerances.order_target) <= tolerances.order_window;
  }
  return report;
}

}  // namespace extsnyder
