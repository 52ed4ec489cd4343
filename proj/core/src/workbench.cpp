#include "extsnyder/workbench.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <ostream>

#include <json.hpp>

#include "extsnyder/convergence.hpp"
#include "extsnyder/csv.hpp"
#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

using ordered_json = nlohmann::ordered_json;

AlgebraTolerances algebra_tolerances(const RunConfig& config) {
  return {config.tolerance("exact_residual"), config.tolerance("order_target"), config.tolerance("order_window")};
}

SweepPoint sweep_point(const BasisPtr& basis, ModelParams params, ModelKind model, RealizationKind realization,
                       double lambda, int levels, double degeneracy_tolerance) {
  params.lambda = lambda;
  const HamiltonianParts parts = build_parts(basis, params, model, realization);
  const auto k = static_cast<std::size_t>(levels);

  DegenerateOptions dopt;
  dopt.relative_tolerance = degeneracy_tolerance;
  dopt.max_levels = k;
  std::vector<double> predicted;
  for (const auto& block : degenerate_correction(parts.h0, parts.v, dopt)) {
    for (double mu : block.eigenvalues) predicted.push_back(block.level_energy + lambda * lambda * mu);
  }
  std::sort(predicted.begin(), predicted.end());
  predicted.resize(std::min(predicted.size(), k));

  SweepPoint point;
  point.lambda = lambda;
  point.e_exact = exact_spectrum(parts.full(lambda), predicted.size());
  point.e_pt = std::move(predicted);
  return point;
}

std::vector<double> sweep_lambdas(const RunConfig& config) {
  if (config.lambda_sweep.empty()) return {config.params.lambda};
  return config.lambda_sweep;
}

}  // namespace

SweepResult convergence_sweep(const BasisPtr& basis, const ModelParams& params, ModelKind model,
                              RealizationKind realization, const std::vector<double>& lambdas, int levels,
                              double degeneracy_tolerance) {
  if (lambdas.size() < 3) throw ValidationError("lambda_sweep: a sweep needs at least 3 points");
  for (double lam : lambdas) {
    if (!(lam > 0.0)) throw ValidationError("lambda_sweep: sweep points must be > 0");
  }
  if (levels < 1) throw ValidationError("levels: must be >= 1");
  params.validate();
  require_consistent(model, realization);

  std::vector<std::future<SweepPoint>> jobs;
  for (double lam : lambdas) {
    jobs.push_back(std::async(std::launch::async, sweep_point, basis, params, model, realization, lam, levels,
                              degeneracy_tolerance));
  }
  SweepResult result;
  std::vector<ConvergenceSample> ground;
  for (auto& job : jobs) {
    result.points.push_back(job.get());
    const SweepPoint& p = result.points.back();
    const double scale = std::max(1.0, std::abs(p.e_exact.front()));
    const double residual = std::abs(p.e_exact.front() - p.e_pt.front());
    if (residual <= kResidualFloor * scale && result.fit_note.empty()) {
      result.fit_note = "ground-level residual " + format_double(residual) + " at lambda=" + format_double(p.lambda) +
                        " is at the round-off floor; no slope can be fitted";
    }
    ground.push_back({p.lambda, residual});
  }
  if (result.fit_note.empty()) result.slope = convergence_fit(ground);
  return result;
}

std::string algebra_report_json(const AlgebraReport& report, const AlgebraTolerances& tolerances) {
  ordered_json doc;
  doc["realization"] = std::string(to_string(report.kind));
  doc["interior_margin"] = report.margin;
  doc["lambdas"] = report.lambdas;
  doc["tolerances"] = {{"exact_residual", tolerances.exact},
                       {"order_target", tolerances.order_target},
                       {"order_window", tolerances.order_window}};
  ordered_json rels = ordered_json::array();
  for (const auto& r : report.relations) {
    ordered_json j;
    j["relation_id"] = r.id;
    j["group"] = r.group;
    j["expected"] = std::string(to_string(r.expected));
    j["interior_margin"] = r.margin;
    j["lambdas"] = r.lambdas;
    j["residuals"] = r.residuals;
    j["exact"] = r.exact;
    j["fitted_order"] = r.fitted_order ? ordered_json(*r.fitted_order) : ordered_json(nullptr);
    j["pass"] = r.pass;
    rels.push_back(std::move(j));
  }
  doc["relations"] = std::move(rels);
  doc["pass"] = report.all_pass();
  return doc.dump(2) + "\n";
}

std::string spectrum_csv(const std::vector<SpectrumRecord>& records) {
  CsvWriter csv({"level", "occupations", "e0", "de_closed", "de_diagonal", "de_degenerate", "e_exact",
                 "abs_diag_vs_closed"});
  for (const auto& r : records) {
    csv.row({std::to_string(r.level), occupations_json(r.occupations), format_double(r.e0),
             format_double(r.de_closed), format_double(r.de_diagonal), format_double(r.de_degenerate),
             r.e_exact ? format_double(*r.e_exact) : std::string(),
             format_double(std::abs(r.de_diagonal - r.de_closed))});
  }
  return csv.str();
}

std::string sweep_csv(const SweepResult& result) {
  CsvWriter csv({"lambda", "level", "e_exact", "e_pt", "residual"});
  for (const auto& p : result.points) {
    for (std::size_t k = 0; k < p.e_exact.size(); ++k) {
      csv.row({format_double(p.lambda), std::to_string(k), format_double(p.e_exact[k]), format_double(p.e_pt[k]),
               format_double(std::abs(p.e_exact[k] - p.e_pt[k]))});
    }
  }
  csv.raw_line("slope," + format_double(result.slope));
  return csv.str();
}

CommandResult run_verify_algebra(const RunConfig& config, const CommandOptions& options) {
  const BasisPtr basis = enumerate_basis(config.params);
  const AlgebraTolerances tol = algebra_tolerances(config);
  const std::vector<double> lambdas = sweep_lambdas(config);
  RealizeOptions ropt;
  ropt.corrupt_first_coordinate = options.corrupt_realization;
  const AlgebraReport report =
      algebra_report(basis, config.params, config.realization, lambdas, config.params.interior_margin, tol, ropt);

  CommandResult result;
  result.output = algebra_report_json(report, tol);
  if (!report.all_pass()) {
    result.exit_code = kExitTolerance;
    std::string failed;
    for (const auto& r : report.relations) {
      if (!r.pass) failed += (failed.empty() ? "" : "; ") + r.id;
    }
    result.message = "relations outside tolerance: " + failed;
  }
  return result;
}

CommandResult run_spectrum(const RunConfig& config) {
  const BasisPtr basis = enumerate_basis(config.params);
  SpectrumOptions opt;
  opt.levels = config.levels;
  opt.degeneracy_tolerance = config.tolerance("degeneracy");
  const auto records = spectrum_records(basis, config.params, config.model, config.realization, opt);

  CommandResult result;
  result.output = spectrum_csv(records);
  const double tol = config.tolerance("diag_vs_closed");
  std::size_t bad = 0;
  for (const auto& r : records) {
    if (std::abs(r.de_diagonal - r.de_closed) > tol * std::max(1.0, std::abs(r.de_closed))) ++bad;
  }
  if (bad > 0) {
    result.exit_code = kExitTolerance;
    result.message = std::to_string(bad) + " state(s) with |de_diagonal - de_closed| above diag_vs_closed";
  }
  return result;
}

CommandResult run_sweep(const RunConfig& config, bool assert_slope) {
  const BasisPtr basis = enumerate_basis(config.params);
  const SweepResult sweep = convergence_sweep(basis, config.params, config.model, config.realization,
                                              config.lambda_sweep, config.levels, config.tolerance("degeneracy"));
  CommandResult result;
  result.output = sweep_csv(sweep);
  if (assert_slope || config.has_tolerance("slope_target")) {
    const double target = config.tolerance("slope_target");
    const double window = config.tolerance("slope_window");
    if (!sweep.fit_note.empty()) {
      result.exit_code = kExitTolerance;
      result.message = sweep.fit_note;
    } else if (!(std::abs(sweep.slope - target) <= window)) {
      result.exit_code = kExitTolerance;
      result.message = "ground-level slope " + format_double(sweep.slope) + " outside " + format_double(target) +
                       " +- " + format_double(window);
    }
  } else {
    result.message = sweep.fit_note;
  }
  return result;
}

int run_command(Command command, const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& out_path, const CommandOptions& options,
                std::ostream& log) {
  try {
    const RunConfig config = load_config(config_path);
    std::filesystem::path out;
    if (out_path) {
      out = *out_path;
    } else if (!config.output_path.empty()) {
      out = config.output_path;
    } else {
      throw ValidationError("output_path: no --out given and the config has no output_path");
    }

    CommandResult result;
    switch (command) {
      case Command::VerifyAlgebra: result = run_verify_algebra(config, options); break;
      case Command::Spectrum: result = run_spectrum(config); break;
      case Command::Sweep: result = run_sweep(config, false); break;
      case Command::Convergence: result = run_sweep(config, true); break;
    }

    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file) throw ValidationError(out.string() + ": cannot open output file");
    file << result.output;
    file.close();
    if (!file) throw ValidationError(out.string() + ": write failed");

    if (result.exit_code != kExitOk) {
      log << "tolerance failure: " << result.message << '\n';
    } else if (!result.message.empty()) {
      log << "note: " << result.message << '\n';
    }
    return result.exit_code;
  } catch (const ValidationError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const StructuralError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitTolerance;
  }
}

}  // namespace extsnyder
