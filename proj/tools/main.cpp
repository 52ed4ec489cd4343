// Command line front end: extsnyder <verify-algebra|spectrum|sweep|convergence> --config <json> --out <file>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "extsnyder/workbench.hpp"

namespace {

struct Paths {
  std::string config;
  std::string out;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help, Paths& paths) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--config", paths.config, "JSON run configuration")->required();
  sub->add_option("--out", paths.out, "output file (overrides output_path)");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Snyder oscillator workbench"};
  app.require_subcommand(1);

  Paths paths;
  extsnyder::CommandOptions options;
  CLI::App* verify = add_command(app, "verify-algebra", "check the commutation relations of a realization", paths);
  // Negative control for the verification pipeline; not part of normal use.
  verify->add_flag("--test-corrupt-realization", options.corrupt_realization)->group("");
  CLI::App* spectrum = add_command(app, "spectrum", "closed-form, perturbative and exact spectra", paths);
  CLI::App* sweep = add_command(app, "sweep", "exact vs first-order energies over lambda_sweep", paths);
  CLI::App* convergence = add_command(app, "convergence", "sweep with the slope assertion enabled", paths);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? extsnyder::kExitOk : extsnyder::kExitInput;
  }

  extsnyder::Command command = extsnyder::Command::VerifyAlgebra;
  if (spectrum->parsed()) command = extsnyder::Command::Spectrum;
  if (sweep->parsed()) command = extsnyder::Command::Sweep;
  if (convergence->parsed()) command = extsnyder::Command::Convergence;
  (void)verify;

  std::optional<std::filesystem::path> out;
  if (!paths.out.empty()) out = paths.out;
  return extsnyder::run_command(command, paths.config, out, options, std::cerr);
}
