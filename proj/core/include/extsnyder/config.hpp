#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extsnyder/hamiltonians.hpp"

namespace extsnyder {

/// One experiment, read from a JSON object with snake_case keys.
///
/// Required: model, realization, d, lambda, beta, tensor_mass, omega, n_max.
/// Optional: omega_tensor (= omega), interior_margin (4), levels (10),
/// lambda_sweep, tolerances, output_path.
struct RunConfig {
  ModelKind model = ModelKind::CovariantExtended;
  RealizationKind realization = RealizationKind::Weyl;
  ModelParams params;
  int levels = 10;
  std::vector<double> lambda_sweep;
  std::map<std::string, double> tolerances;  // only explicitly configured entries
  std::string output_path;

  // Configured value or the documented default; unknown names throw StructuralError.
  double tolerance(std::string_view name) const;
  bool has_tolerance(std::string_view name) const { return tolerances.count(std::string(name)) > 0; }
};

/// Tolerance names with their defaults, in a stable order.
const std::vector<std::pair<std::string, double>>& default_tolerances();

/// Throws ValidationError naming the offending key; parse errors carry line and column.
RunConfig parse_config(std::string_view text, std::string_view source = "<config>");
RunConfig load_config(const std::filesystem::path& path);

/// Closest candidate by edit distance, if reasonably close.
std::optional<std::string> suggest_key(std::string_view key, const std::vector<std::string>& candidates);

}  // namespace extsnyder
