#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "extsnyder/error.hpp"
#include "extsnyder/fock_ops.hpp"
#include "extsnyder/hamiltonians.hpp"
#include "extsnyder/perturbation.hpp"
#include "helpers.hpp"

using namespace extsnyder;

TEST_CASE("diagonal correction of a number operator") {
  const auto basis = enumerate_basis(testing::params(2, 4));
  const Operator n = number_op(basis, ModeId::vector(1));
  const std::vector<int> occ{3, 1, 0};
  CHECK(diagonal_correction(basis->index_of(occ), n) == 3.0);
  const auto all = diagonal_corrections(n);
  CHECK(all[basis->index_of(occ)] == 3.0);
}

TEST_CASE("non-Hermitian perturbations are rejected") {
  const auto basis = enumerate_basis(testing::params(2, 2));
  const Operator a = ladder(basis, ModeId::vector(1), LadderKind::Lower);
  CHECK_THROWS_AS(diagonal_correction(0, a), ValidationError);
  const ModelParams p = testing::params(2, 2);
  const Operator h0 = build_free(basis, p, ModelKind::SplitEqualFrequency);
  CHECK_THROWS_AS(degenerate_correction(h0, a), ValidationError);
  CHECK_THROWS_AS(degenerate_correction(a + a.adjoint(), h0), StructuralError);
}

TEST_CASE("v = h0 gives each level energy repeated") {
  const ModelParams p = testing::params(2, 3);
  const auto basis = enumerate_basis(p);
  const Operator h0 = build_free(basis, p, ModelKind::SplitEqualFrequency);
  const auto blocks = degenerate_correction(h0, h0);
  std::size_t covered = 0;
  for (const auto& b : blocks) {
    covered += b.states.size();
    for (double ev : b.eigenvalues) CHECK(ev == doctest::Approx(b.level_energy));
    CHECK(b.off_diagonal_max == 0.0);
  }
  CHECK(covered == basis->dimension());
  CHECK(blocks.front().level_energy == doctest::Approx(1.5));
  CHECK(blocks[1].states.size() == 3);
}

TEST_CASE("number-operator covariant potential is block diagonal") {
  const ModelParams p = testing::params(2, 3);
  const auto basis = enumerate_basis(p);
  const Operator h0 = build_free(basis, p, ModelKind::CovariantExtended);
  const Operator nf = covariant_number_form(basis, p);
  for (const auto& b : degenerate_correction(h0, nf)) {
    auto diag = b.diagonal;
    std::sort(diag.begin(), diag.end());
    REQUIRE(diag.size() == b.eigenvalues.size());
    for (std::size_t i = 0; i < diag.size(); ++i) CHECK(b.eigenvalues[i] == doctest::Approx(diag[i]).epsilon(1e-12));
    CHECK(b.off_diagonal_max == 0.0);
  }
}

TEST_CASE("block eigenvalues are invariant under a basis permutation") {
  const ModelParams p = testing::params(2, 3);
  const auto basis = enumerate_basis(p);
  const Operator h0 = build_free(basis, p, ModelKind::CovariantExtended);
  const Operator v = build_interaction(basis, p, ModelKind::CovariantExtended, RealizationKind::WeylUnified);

  std::vector<int> perm(basis->dimension());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  Eigen::PermutationMatrix<Eigen::Dynamic> pm(static_cast<Eigen::Index>(perm.size()));
  for (std::size_t i = 0; i < perm.size(); ++i) pm.indices()[static_cast<Eigen::Index>(i)] = perm[i];
  const SparseMatrix h0p = pm * h0.matrix() * pm.transpose();
  const SparseMatrix vp = pm * v.matrix() * pm.transpose();

  const auto a = degenerate_correction(h0, v);
  const auto b = degenerate_correction(Operator(basis, h0p), Operator(basis, vp));
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    REQUIRE(a[k].eigenvalues.size() == b[k].eigenvalues.size());
    for (std::size_t i = 0; i < a[k].eigenvalues.size(); ++i)
      CHECK(a[k].eigenvalues[i] == doctest::Approx(b[k].eigenvalues[i]).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("level limits") {
  const ModelParams p = testing::params(2, 3);
  const auto basis = enumerate_basis(p);
  const Operator h0 = build_free(basis, p, ModelKind::SplitEqualFrequency);
  DegenerateOptions opt;
  opt.max_levels = 2;
  CHECK(degenerate_correction(h0, h0, opt).size() == 2);
  opt.max_levels = 100;
  opt.max_energy = 2.6;
  CHECK(degenerate_correction(h0, h0, opt).size() == 2);
}
