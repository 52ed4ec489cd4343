#include <doctest.h>

#include "extsnyder/eigensolver.hpp"
#include "extsnyder/error.hpp"
#include "extsnyder/fock_ops.hpp"
#include "extsnyder/hamiltonians.hpp"
#include "helpers.hpp"

using namespace extsnyder;

TEST_CASE("free spectrum ground energy") {
  const ModelParams p = testing::params(2, 2);
  const auto basis = enumerate_basis(p);
  const auto ev = exact_spectrum(build_free(basis, p, ModelKind::SplitEqualFrequency), 5);
  // Three unit-frequency modes: the first excited level is threefold degenerate.
  CHECK(ev[0] == doctest::Approx(1.5));
  CHECK(ev[1] == doctest::Approx(2.5));
  CHECK(ev[3] == doctest::Approx(2.5));
  CHECK(ev[4] == doctest::Approx(3.5));
}

TEST_CASE("lambda = 0 full model equals the free spectrum") {
  ModelParams p = testing::params(2, 3);
  const auto basis = enumerate_basis(p);
  const auto parts = build_parts(basis, p, ModelKind::CovariantExtended, RealizationKind::WeylUnified);
  const auto a = exact_spectrum(parts.full(0.0), 10);
  const auto b = exact_spectrum(parts.h0, 10);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("dense and block Krylov paths agree near dimension 1000") {
  ModelParams p = testing::params(2, 9);  // 1000 states
  p.lambda = 0.3;
  const auto basis = enumerate_basis(p);
  const auto parts = build_parts(basis, p, ModelKind::CovariantExtended, RealizationKind::WeylUnified);
  const Operator h = parts.full(p.lambda);
  EigenOptions iterative;
  iterative.force_iterative = true;
  const auto dense = exact_spectrum(h, 12);
  const auto krylov = exact_spectrum(h, 12, iterative);
  for (std::size_t i = 0; i < dense.size(); ++i) CHECK(krylov[i] == doctest::Approx(dense[i]).epsilon(1e-10).scale(1.0));
  // Same seed, same answer.
  const auto again = exact_spectrum(h, 12, iterative);
  for (std::size_t i = 0; i < krylov.size(); ++i) CHECK(again[i] == krylov[i]);
}

TEST_CASE("Krylov path is taken above the dense threshold") {
  ModelParams p = testing::params(2, 16);  // 4913 states
  p.lambda = 0.2;
  const auto basis = enumerate_basis(p);
  const auto parts = build_parts(basis, p, ModelKind::CovariantExtended, RealizationKind::WeylUnified);
  const auto ev = exact_spectrum(parts.full(p.lambda), 4);
  CHECK(ev[0] == doctest::Approx(1.5).epsilon(1e-3));
  CHECK(ev[1] > ev[0]);
  // Degenerate triplet of the first excited level stays resolved.
  CHECK(ev[3] - ev[1] < 1e-8);
}

TEST_CASE("eigensolver input validation") {
  const auto basis = enumerate_basis(testing::params(2, 2));
  const Operator a = ladder(basis, ModeId::vector(1), LadderKind::Lower);
  CHECK_THROWS_AS(exact_spectrum(a, 1), ValidationError);
  CHECK_THROWS_AS(exact_spectrum(Operator::identity(basis), 0), ValidationError);
  CHECK_THROWS_AS(exact_spectrum(Operator::identity(basis), 28), ValidationError);
}
