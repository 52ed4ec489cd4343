#include <doctest.h>

#include <complex>

#include "extsnyder/error.hpp"
#include "extsnyder/fock_ops.hpp"
#include "helpers.hpp"

using namespace extsnyder;

namespace {
const Complex kI{0.0, 1.0};
}

TEST_CASE("ladder operators match the dense Kronecker reference") {
  const auto basis = enumerate_basis(testing::params(2, 3));
  const auto a = ladder(basis, ModeId::vector(2), LadderKind::Lower);
  const auto ref = oracle::embed(oracle::single_mode_lower(3), 1, 3);
  CHECK(testing::max_diff(a, ref) < 1e-15);
  const auto ad = ladder(basis, ModeId::tensor(1, 2), LadderKind::Raise);
  CHECK(testing::max_diff(ad, oracle::embed(oracle::single_mode_lower(3).adjoint(), 2, 3)) < 1e-15);
}

TEST_CASE("canonical pairs match the dense reference and satisfy [x,p] = i in the interior") {
  const auto basis = enumerate_basis(testing::params(2, 4));
  const auto pr = canonical_pair(basis, ModeId::vector(1), 2.0, 0.5);
  const auto ref = oracle::dense_pair(4, 0, 3, 2.0, 0.5);
  CHECK(testing::max_diff(pr.x, ref.x) < 1e-15);
  CHECK(testing::max_diff(pr.p, ref.p) < 1e-15);
  const Operator defect = commutator(pr.x, pr.p) - kI * Operator::identity(basis);
  CHECK(interior_residual_norm(defect, 1) < 1e-14);
  // The truncation edge breaks the relation.
  CHECK(interior_residual_norm(defect, 0) > 1.0);
  CHECK(pr.x.hermiticity_defect() == 0.0);
  CHECK(pr.p.hermiticity_defect() < 1e-16);
}

TEST_CASE("number operator is a^dagger a") {
  const auto basis = enumerate_basis(testing::params(2, 3));
  const ModeId m = ModeId::tensor(1, 2);
  const Operator n = number_op(basis, m);
  const Operator ref = ladder(basis, m, LadderKind::Raise) * ladder(basis, m, LadderKind::Lower);
  CHECK((n - ref).max_abs() < 1e-14);
  CHECK(n.is_diagonal());
}

TEST_CASE("operator arithmetic and symmetric products") {
  const auto basis = enumerate_basis(testing::params(2, 2));
  const auto pr = canonical_pair(basis, ModeId::vector(1), 1.0, 1.0);
  const Operator s = symmetric_product(pr.x, pr.p);
  CHECK(s.hermiticity_defect() < 1e-15);
  CHECK((pr.x * pr.p).hermiticity_defect() > 0.1);
  CHECK(((pr.x + pr.p) - pr.p - pr.x).max_abs() == 0.0);
  CHECK((2.0 * pr.x - pr.x * 2.0).max_abs() == 0.0);
  CHECK((pr.x * pr.p - pr.x * pr.p).max_abs() == 0.0);
  CHECK((-pr.x + pr.x).max_abs() == 0.0);
}

TEST_CASE("operators on different spaces cannot be combined") {
  const auto b1 = enumerate_basis(testing::params(2, 2));
  const auto b2 = enumerate_basis(testing::params(2, 3));
  CHECK_THROWS_AS(Operator::identity(b1) + Operator::identity(b2), StructuralError);
  CHECK_THROWS_AS(Operator::identity(b1) * Operator::identity(b2), StructuralError);
}

TEST_CASE("interior mask and margin validation") {
  const auto basis = enumerate_basis(testing::params(2, 4));
  const auto mask = interior_mask(*basis, 4);
  CHECK(std::count(mask.begin(), mask.end(), true) == 1);
  CHECK(mask[0]);
  const auto mask2 = interior_mask(*basis, 2);
  CHECK(std::count(mask2.begin(), mask2.end(), true) == 27);
  CHECK_THROWS_AS(interior_mask(*basis, 5), ValidationError);
  CHECK_THROWS_AS(interior_mask(*basis, -1), ValidationError);
  CHECK_THROWS_AS(canonical_pair(basis, ModeId::vector(1), 0.0, 1.0), ValidationError);
}
