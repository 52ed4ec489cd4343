#pragma once

#include <filesystem>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "extsnyder/algebra.hpp"
#include "extsnyder/config.hpp"
#include "extsnyder/spectrum.hpp"

namespace extsnyder {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,      // unreadable config, validation failure, dimension cap
  kExitTolerance = 2,  // a scientific tolerance was not met
};

enum class Command { VerifyAlgebra, Spectrum, Sweep, Convergence };

struct CommandOptions {
  // Negative control: corrupts the first realized coordinate.
  bool corrupt_realization = false;
};

/// Rendered output of one command plus its exit code; `message` explains a
/// nonzero code.
struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  std::string message;
};

/// The lowest `levels` exact eigenvalues of H0 + lambda^2 V next to their
/// first-order predictions E0 + lambda^2 mu, both ascending.
struct SweepPoint {
  double lambda = 0.0;
  std::vector<double> e_exact;
  std::vector<double> e_pt;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  // Log-log slope of the ground-level residual; NaN when some residual sits at
  // the round-off floor (first-order PT exact), with the reason in `fit_note`.
  double slope = std::numeric_limits<double>::quiet_NaN();
  std::string fit_note;
};

// Residuals at or below this fraction of the energy scale are round-off.
inline constexpr double kResidualFloor = 1e-12;

/// Points run concurrently; output order follows `lambdas`. Needs >= 3 points.
SweepResult convergence_sweep(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                              RealizationKind realization, const std::vector<double>& lambdas, int levels,
                              double degeneracy_tolerance = 1e-9);

std::string algebra_report_json(const AlgebraReport& report, const AlgebraTolerances& tolerances);
std::string spectrum_csv(const std::vector<SpectrumRecord>& records);
std::string sweep_csv(const SweepResult& result);

CommandResult run_verify_algebra(const RunConfig& config, const CommandOptions& options = {});
CommandResult run_spectrum(const RunConfig& config);
// With `assert_slope`, or when slope_target is configured, the ground-level
// slope must lie within slope_target +- slope_window.
CommandResult run_sweep(const RunConfig& config, bool assert_slope);

/// Loads the config, runs the command, writes the output file and maps every
/// failure to the exit-code contract. Diagnostics go to `log`.
int run_command(Command command, const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& out_path, const CommandOptions& options,
                std::ostream& log);

}  // namespace extsnyder
