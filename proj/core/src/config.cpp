#include "extsnyder/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "extsnyder/error.hpp"

namespace extsnyder {

namespace {

using nlohmann::json;

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "model",          "realization",     "d",      "lambda",       "beta",
      "tensor_mass",    "omega",           "omega_tensor", "n_max", "interior_margin",
      "levels",         "lambda_sweep",    "tolerances",   "output_path"};
  return keys;
}

constexpr const char* kRequired[] = {"model", "realization", "d", "lambda", "beta", "tensor_mass", "omega", "n_max"};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string unknown_key_message(std::string_view where, const std::string& key,
                                const std::vector<std::string>& candidates) {
  std::string msg = std::string(where) + ": unknown key '" + key + "'";
  if (auto s = suggest_key(key, candidates)) msg += " (did you mean '" + *s + "'?)";
  return msg;
}

double get_number(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ValidationError(std::string(key) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ValidationError(std::string(key) + ": must be finite");
  return x;
}

int get_int(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ValidationError(std::string(key) + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw ValidationError(std::string(key) + ": out of range");
  return static_cast<int>(x);
}

std::string get_string(const json& obj, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_string()) throw ValidationError(std::string(key) + ": expected a string");
  return v.get<std::string>();
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

const std::vector<std::pair<std::string, double>>& default_tolerances() {
  static const std::vector<std::pair<std::string, double>> defaults = {
      {"exact_residual", 1e-12}, {"order_target", 2.0},   {"order_window", 0.2},  {"slope_target", 4.0},
      {"slope_window", 0.3},     {"diag_vs_closed", 1e-9}, {"degeneracy", 1e-9},
  };
  return defaults;
}

double RunConfig::tolerance(std::string_view name) const {
  if (auto it = tolerances.find(std::string(name)); it != tolerances.end()) return it->second;
  for (const auto& [key, value] : default_tolerances())
    if (key == name) return value;
  throw StructuralError("unknown tolerance '" + std::string(name) + "'");
}

std::optional<std::string> suggest_key(std::string_view key, const std::vector<std::string>& candidates) {
  const std::string k = lower(key);
  std::optional<std::string> best;
  std::size_t best_d = 0;
  for (const auto& c : candidates) {
    const std::size_t d = edit_distance(k, c);
    if (!best || d < best_d) {
      best = c;
      best_d = d;
    }
  }
  if (best && best_d <= std::max<std::size_t>(2, best->size() / 3)) return best;
  return std::nullopt;
}

RunConfig parse_config(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ValidationError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": JSON parse error: " + e.what());
  }
  if (!doc.is_object()) throw ValidationError(std::string(source) + ": top level must be a JSON object");

  for (const auto& item : doc.items()) {
    const auto& keys = known_keys();
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
      throw ValidationError(unknown_key_message(source, item.key(), keys));
    }
  }
  for (const char* key : kRequired) {
    if (!doc.contains(key)) throw ValidationError(std::string(key) + ": required key is missing");
  }

  RunConfig cfg;
  cfg.model = parse_model(get_string(doc, "model"));
  cfg.realization = parse_realization(get_string(doc, "realization"));

  ModelParams& p = cfg.params;
  p.dim = get_int(doc, "d");
  if (p.dim < 2) throw ValidationError("d: must be >= 2 (no tensor modes exist for d = " + std::to_string(p.dim) + ")");
  p.lambda = get_number(doc, "lambda");
  p.beta = get_number(doc, "beta");
  p.tensor_mass = get_number(doc, "tensor_mass");
  p.omega = get_number(doc, "omega");
  p.omega_tensor = doc.contains("omega_tensor") ? get_number(doc, "omega_tensor") : p.omega;
  p.n_max = get_int(doc, "n_max");
  p.interior_margin = doc.contains("interior_margin") ? get_int(doc, "interior_margin") : 4;
  p.validate();
  if (p.interior_margin < 0) throw ValidationError("interior_margin: must be >= 0");

  if (doc.contains("levels")) cfg.levels = get_int(doc, "levels");
  if (cfg.levels < 1) throw ValidationError("levels: must be >= 1");

  if (doc.contains("lambda_sweep")) {
    const json& sweep = doc.at("lambda_sweep");
    if (!sweep.is_array()) throw ValidationError("lambda_sweep: expected an array of numbers");
    for (const json& v : sweep) {
      if (!v.is_number()) throw ValidationError("lambda_sweep: expected an array of numbers");
      const double lam = v.get<double>();
      if (!std::isfinite(lam) || lam < 0.0) throw ValidationError("lambda_sweep: entries must be finite and >= 0");
      cfg.lambda_sweep.push_back(lam);
    }
  }

  if (doc.contains("tolerances")) {
    const json& tol = doc.at("tolerances");
    if (!tol.is_object()) throw ValidationError("tolerances: expected an object of name -> number");
    std::vector<std::string> names;
    for (const auto& [name, value] : default_tolerances()) names.push_back(name);
    for (const auto& item : tol.items()) {
      if (std::find(names.begin(), names.end(), item.key()) == names.end()) {
        throw ValidationError(unknown_key_message("tolerances", item.key(), names));
      }
      if (!item.value().is_number()) throw ValidationError("tolerances." + item.key() + ": expected a number");
      const double x = item.value().get<double>();
      if (!std::isfinite(x) || x < 0.0) throw ValidationError("tolerances." + item.key() + ": must be finite and >= 0");
      cfg.tolerances[item.key()] = x;
    }
  }

  if (doc.contains("output_path")) cfg.output_path = get_string(doc, "output_path");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path.string() + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.string());
}

}  // namespace extsnyder
