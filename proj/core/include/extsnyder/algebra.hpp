#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extsnyder/realizations.hpp"

namespace extsnyder {

/// How a relation is expected to hold for a given realization.
enum class Expectation {
  Exact,        // residual at the floating point floor for every lambda
  SecondOrder,  // residual scales as lambda^2
};

std::string_view to_string(Expectation e);

/// Residual of one commutation relation at one lambda: the K-interior max-entry
/// norm of (left-hand commutator - target right-hand side), maximized over
/// every index assignment.
struct RelationResidual {
  std::string id;
  std::string group;
  Expectation expected = Expectation::Exact;
  double residual = 0.0;
};

/// Evaluates every relation targeted by `ops.kind()` at the realization's own lambda.
std::vector<RelationResidual> relation_residuals(const RealizedOps& ops, const ModelParams& params,
                                                 int margin);

struct AlgebraTolerances {
  double exact = 1e-12;
  double order_target = 2.0;
  double order_window = 0.2;
};

struct RelationReport {
  std::string id;
  std::string group;
  Expectation expected = Expectation::Exact;
  int margin = 0;
  std::vector<double> lambdas;
  std::vector<double> residuals;
  bool exact = false;                   // every residual <= tolerances.exact
  std::optional<double> fitted_order;   // present when a fit was performed
  bool pass = false;
};

struct AlgebraReport {
  RealizationKind kind = RealizationKind::Weyl;
  int margin = 0;
  std::vector<double> lambdas;
  std::vector<RelationReport> relations;

  bool all_pass() const;
  const RelationReport& find(std::string_view id) const;
};

/// Builds the realization at each lambda sample, evaluates every relation and
/// classifies it. SecondOrder relations that are not exact are fitted over the
/// positive samples; fewer than three positive samples then throws ValidationError.
AlgebraReport algebra_report(const BasisPtr& basis, const ModelParams& params, RealizationKind kind,
                             std::span<const double> lambdas, int margin,
                             const AlgebraTolerances& tolerances = {}, RealizeOptions options = {});

}  // namespace extsnyder
