#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "extsnyder/csv.hpp"
#include "extsnyder/error.hpp"
#include "extsnyder/workbench.hpp"
#include "helpers.hpp"

using namespace extsnyder;

namespace {

RunConfig covariant_config(double lambda) {
  RunConfig c;
  c.model = ModelKind::CovariantExtended;
  c.realization = RealizationKind::WeylUnified;
  c.params = testing::params(2, 4, lambda);
  c.levels = 3;
  return c;
}

}  // namespace

TEST_CASE("format_double prints 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.5) == "1.5");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1e-20) == "9.9999999999999995e-21");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
}

TEST_CASE("csv fields are quoted when needed") {
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("{\"v1\":0}") == "\"{\"\"v1\"\":0}\"");
  CsvWriter w({"a", "b"});
  CHECK_THROWS_AS(w.row({"1"}), StructuralError);
}

TEST_CASE("spectrum output of the covariant model") {
  const RunConfig c = covariant_config(0.1);
  const CommandResult r = run_spectrum(c);
  CHECK(r.exit_code == kExitOk);
  std::istringstream in(r.output);
  std::string line;
  std::getline(in, line);
  CHECK(line == "level,occupations,e0,de_closed,de_diagonal,de_degenerate,e_exact,abs_diag_vs_closed");
  std::getline(in, line);
  CHECK(line.rfind("0,\"{\"\"v1\"\":0,\"\"v2\"\":0,\"\"t12\"\":0}\",1.5,0,", 0) == 0);
  // Tensor quantum row: de_closed = 0.25 lambda^2 M w^2.
  CHECK(r.output.find("1,\"{\"\"v1\"\":0,\"\"v2\"\":0,\"\"t12\"\":1}\",2.5,0.0025000000000000005,") !=
        std::string::npos);
}

TEST_CASE("spectrum records at lambda = 0 are the free spectrum") {
  const RunConfig c = covariant_config(0.0);
  const auto basis = enumerate_basis(c.params);
  const auto records = spectrum_records(basis, c.params, c.model, c.realization, {});
  for (const auto& r : records) {
    CHECK(r.de_closed == 0.0);
    CHECK(r.de_diagonal == 0.0);
    CHECK(r.de_degenerate == 0.0);
    REQUIRE(r.e_exact.has_value());
    CHECK(std::abs(*r.e_exact - r.e0) <= 1e-10);
  }
}

TEST_CASE("Moyal vacuum row carries the constant shift") {
  RunConfig c = covariant_config(0.2);
  c.model = ModelKind::MoyalDynamic;
  c.realization = RealizationKind::MoyalDynamical;
  const auto records = spectrum_records(enumerate_basis(c.params), c.params, c.model, c.realization, {});
  CHECK(records.front().de_closed == doctest::Approx(0.04 * 2.0 / 32.0));
  CHECK(records.front().de_diagonal == doctest::Approx(records.front().de_closed).epsilon(1e-12));
}

TEST_CASE("spectrum output is byte identical across runs") {
  const RunConfig c = covariant_config(0.15);
  CHECK(run_spectrum(c).output == run_spectrum(c).output);
}

TEST_CASE("spectrum flags closed-form mismatches with exit code 2") {
  RunConfig c = covariant_config(0.1);
  c.model = ModelKind::SplitTwoFrequencyWeyl;
  c.realization = RealizationKind::Weyl;
  c.params.omega_tensor = 2.0;  // the printed correction assumes Omega = omega
  CHECK(run_spectrum(c).exit_code == kExitTolerance);
  c.params.omega_tensor = 1.0;
  CHECK(run_spectrum(c).exit_code == kExitOk);
}

TEST_CASE("covariant interaction commutes with the free part, so first-order PT is exact") {
  RunConfig c = covariant_config(0.05);
  c.params.n_max = 8;
  c.lambda_sweep = {0.025, 0.05, 0.1};
  const SweepResult s = convergence_sweep(enumerate_basis(c.params), c.params, c.model, c.realization,
                                          c.lambda_sweep, c.levels);
  REQUIRE(s.points.size() == 3);
  for (const auto& p : s.points) {
    for (std::size_t k = 0; k < p.e_exact.size(); ++k) CHECK(std::abs(p.e_exact[k] - p.e_pt[k]) <= 1e-11);
  }
  CHECK(std::isnan(s.slope));
  CHECK(!s.fit_note.empty());

  const CommandResult plain = run_sweep(c, false);
  CHECK(plain.exit_code == kExitOk);
  CHECK(plain.output.rfind("lambda,level,e_exact,e_pt,residual\n", 0) == 0);
  CHECK(plain.output.find("\nslope,nan\n") != std::string::npos);
  CHECK(run_sweep(c, true).exit_code == kExitTolerance);
}

TEST_CASE("two-frequency ground residual converges as lambda^4") {
  RunConfig c;
  c.model = ModelKind::SplitTwoFrequencyWeyl;
  c.realization = RealizationKind::Weyl;
  c.params = testing::params(2, 8, 0.05);
  c.params.omega_tensor = 1.5;
  c.levels = 3;
  c.lambda_sweep = {0.025, 0.05, 0.1};
  const CommandResult r = run_sweep(c, true);
  CHECK(r.exit_code == kExitOk);
  const SweepResult s = convergence_sweep(enumerate_basis(c.params), c.params, c.model, c.realization,
                                          c.lambda_sweep, c.levels);
  CHECK(s.fit_note.empty());
  CHECK(s.slope == doctest::Approx(4.0).epsilon(0.075));
  CHECK(s.points[1].lambda == 0.05);
}

TEST_CASE("slope assertion failures map to exit code 2") {
  RunConfig c;
  c.model = ModelKind::SplitTwoFrequencyWeyl;
  c.realization = RealizationKind::Weyl;
  c.params = testing::params(2, 6, 0.05);
  c.params.omega_tensor = 1.5;
  c.levels = 2;
  c.lambda_sweep = {0.025, 0.05, 0.1};
  c.tolerances["slope_target"] = 2.0;
  c.tolerances["slope_window"] = 0.1;
  CHECK(run_sweep(c, false).exit_code == kExitTolerance);
}

TEST_CASE("single-point sweeps are input errors") {
  RunConfig c = covariant_config(0.05);
  c.lambda_sweep = {0.05};
  CHECK_THROWS_AS(run_sweep(c, false), ValidationError);
}

TEST_CASE("verify-algebra report") {
  RunConfig c = covariant_config(0.1);
  c.realization = RealizationKind::Weyl;
  c.params.n_max = 6;
  c.lambda_sweep = {0.05, 0.1, 0.2};
  const CommandResult ok = run_verify_algebra(c);
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.output.find("\"relation_id\": \"[x_i,x_j] = i lambda beta^2 x_ij\"") != std::string::npos);
  CHECK(ok.output.find("\"pass\": true") != std::string::npos);
  CHECK(run_verify_algebra(c, CommandOptions{true}).exit_code == kExitTolerance);
}
