#include "extsnyder/realizations.hpp"

#include <string>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

// Position of (i, j), 1 <= i < j <= n, in lexicographic pair order.
std::size_t pair_index(int i, int j, int n) {
  std::size_t pos = 0;
  for (int a = 1; a < i; ++a) pos += static_cast<std::size_t>(n - a);
  return pos + static_cast<std::size_t>(j - i - 1);
}

Operator weyl_vector(const PhaseSpace& ps, int i, double lambda) {
  const int d = ps.dim();
  const double b2 = ps.beta() * ps.beta();
  Operator corr = ps.zero();
  for (int k = 1; k <= d; ++k) {
    if (k == i) continue;
    corr += symmetric_product(ps.x(k), ps.p(i, k));
    corr -= b2 * symmetric_product(ps.x(i, k), ps.p(k));
  }
  return ps.x(i) + (lambda / 2.0) * corr;
}

// Tensor correction shared by the Weyl and classical realizations; the
// vector-vector term carries `vector_weight` (1 for Weyl, 2 for classical).
Operator tensor_coordinate(const PhaseSpace& ps, int i, int j, double lambda, double vector_weight) {
  const int d = ps.dim();
  Operator corr = vector_weight * (symmetric_product(ps.x(i), ps.p(j)) -
                                   symmetric_product(ps.x(j), ps.p(i)));
  for (int k = 1; k <= d; ++k) {
    if (k == i || k == j) continue;
    corr += symmetric_product(ps.x(i, k), ps.p(j, k));
    corr -= symmetric_product(ps.x(j, k), ps.p(i, k));
  }
  return ps.x(i, j) + (lambda / 2.0) * corr;
}

Operator classical_vector(const PhaseSpace& ps, int i, double lambda) {
  const int d = ps.dim();
  const double b2 = ps.beta() * ps.beta();
  Operator corr = ps.zero();
  for (int k = 1; k <= d; ++k) {
    if (k != i) corr += symmetric_product(ps.x(i, k), ps.p(k));
  }
  return ps.x(i) - (lambda * b2 / 2.0) * corr;
}

Operator moyal_vector(const PhaseSpace& ps, int i, double lambda) {
  const int d = ps.dim();
  Operator corr = ps.zero();
  for (int j = 1; j <= d; ++j) {
    if (j != i) corr += symmetric_product(ps.x(i, j), ps.p(j));
  }
  return ps.x(i) - (lambda / 2.0) * corr;
}

Operator unified_coordinate(const PhaseSpace& ps, int mu, int nu, double lambda) {
  const int top = ps.dim() + 1;
  Operator corr = ps.zero();
  for (int a = 1; a <= top; ++a) {
    if (a == mu || a == nu) continue;
    corr += symmetric_product(ps.unified_x(mu, a), ps.unified_p(nu, a));
    corr -= symmetric_product(ps.unified_x(nu, a), ps.unified_p(mu, a));
  }
  return ps.unified_x(mu, nu) + (lambda / 2.0) * corr;
}

}  // namespace

std::string_view to_string(RealizationKind kind) {
  switch (kind) {
    case RealizationKind::Weyl: return "weyl";
    case RealizationKind::Classical: return "classical";
    case RealizationKind::MoyalDynamical: return "moyal_dynamical";
    case RealizationKind::WeylUnified: return "weyl_unified";
  }
  return "unknown";
}

RealizationKind parse_realization(std::string_view name) {
  for (auto k : {RealizationKind::Weyl, RealizationKind::Classical, RealizationKind::MoyalDynamical,
                 RealizationKind::WeylUnified}) {
    if (name == to_string(k)) return k;
  }
  throw ValidationError("realization: unknown kind '" + std::string(name) +
                        "' (expected weyl, classical, moyal_dynamical or weyl_unified)");
}

Operator rotation_generator(const PhaseSpace& ps, int i, int j) {
  const int d = ps.dim();
  if (i == j) return ps.zero();
  Operator m = symmetric_product(ps.x(i), ps.p(j)) - symmetric_product(ps.x(j), ps.p(i));
  for (int k = 1; k <= d; ++k) {
    if (k == i || k == j) continue;
    m += symmetric_product(ps.x(i, k), ps.p(j, k));
    m -= symmetric_product(ps.x(j, k), ps.p(i, k));
  }
  return m;
}

std::vector<Operator> rotation_generators(const PhaseSpace& ps) {
  std::vector<Operator> out;
  for (int i = 1; i <= ps.dim(); ++i)
    for (int j = i + 1; j <= ps.dim(); ++j) out.push_back(rotation_generator(ps, i, j));
  return out;
}

const Operator& RealizedOps::x(int i) const {
  if (i < 1 || i > dim()) throw StructuralError("vector index " + std::to_string(i) + " out of range");
  return x_vec_[static_cast<std::size_t>(i - 1)];
}

Operator RealizedOps::signed_pair(const std::vector<Operator>& ops, int i, int j, int n) const {
  if (i < 1 || j < 1 || i > n || j > n) {
    throw StructuralError("pair index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
  if (i == j) return canonical_->zero();
  if (i < j) return ops[pair_index(i, j, n)];
  return -ops[pair_index(j, i, n)];
}

Operator RealizedOps::x(int i, int j) const { return signed_pair(x_ten_, i, j, dim()); }
Operator RealizedOps::rotation(int i, int j) const { return signed_pair(rotations_, i, j, dim()); }

Operator RealizedOps::unified_x(int mu, int nu) const {
  if (!has_unified()) throw StructuralError("unified coordinates exist only for the weyl_unified realization");
  return signed_pair(x_unified_, mu, nu, dim() + 1);
}

RealizedOps realize(std::shared_ptr<const PhaseSpace> canonical, const ModelParams& params,
                    RealizationKind kind, RealizeOptions options) {
  if (!canonical) throw StructuralError("realize: missing canonical operators");
  const PhaseSpace& ps = *canonical;
  const int d = ps.dim();
  const double lam = params.lambda;

  RealizedOps out;
  out.kind_ = kind;
  out.lambda_ = lam;
  out.canonical_ = canonical;

  switch (kind) {
    case RealizationKind::Weyl:
      for (int i = 1; i <= d; ++i) out.x_vec_.push_back(weyl_vector(ps, i, lam));
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.x_ten_.push_back(tensor_coordinate(ps, i, j, lam, 1.0));
      break;
    case RealizationKind::Classical:
      for (int i = 1; i <= d; ++i) out.x_vec_.push_back(classical_vector(ps, i, lam));
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.x_ten_.push_back(tensor_coordinate(ps, i, j, lam, 2.0));
      break;
    case RealizationKind::MoyalDynamical:
      for (int i = 1; i <= d; ++i) out.x_vec_.push_back(moyal_vector(ps, i, lam));
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.x_ten_.push_back(ps.x(i, j));
      break;
    case RealizationKind::WeylUnified: {
      const int top = d + 1;
      for (int mu = 1; mu <= top; ++mu)
        for (int nu = mu + 1; nu <= top; ++nu)
          out.x_unified_.push_back(unified_coordinate(ps, mu, nu, lam));
      for (int i = 1; i <= d; ++i) out.x_vec_.push_back(ps.beta() * out.unified_x(i, top));
      for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.x_ten_.push_back(out.unified_x(i, j));
      break;
    }
  }

  if (options.corrupt_first_coordinate) {
    // x -> x - (xhat - x) flips the sign of the deformation term.
    Operator& x1 = out.x_vec_.front();
    x1 = 2.0 * ps.x(1) - x1;
  }

  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) out.rotations_.push_back(rotation_generator(ps, i, j));
  return out;
}

RealizedOps realize(const BasisPtr& basis, const ModelParams& params, RealizationKind kind) {
  auto ps = std::make_shared<const PhaseSpace>(PhaseSpace::for_model(basis, params, params.omega_tensor));
  return realize(std::move(ps), params, kind);
}

}  // namespace extsnyder
