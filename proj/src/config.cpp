#include "mkdv/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "mkdv/errors.hpp"
#include "mkdv/serialization.hpp"

namespace mkdv {
namespace {

using io::format_double;

const std::vector<std::string_view> kSubcommands{"solve", "gauge", "norms", "experiment"};
const std::vector<std::string_view> kExperiments{"conservation", "gauge_equivalence", "nonexistence", "illposedness",
                                                 "random_momentum", "energy_drift", "apriori", "multiplier"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_real(std::string_view key, std::string_view raw) {
  const std::string v = trim(raw);
  try {
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used == v.size() && std::isfinite(x)) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("malformed number for '" + std::string(key) + "': '" + std::string(raw) + "'");
}

std::int64_t parse_int(std::string_view key, std::string_view raw) {
  const std::string v = trim(raw);
  try {
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw ConfigError("malformed integer for '" + std::string(key) + "': '" + std::string(raw) + "'");
}

std::vector<std::string> split_list(std::string_view raw) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss{std::string(raw)};
  while (std::getline(ss, cell, ',')) {
    cell = trim(cell);
    if (!cell.empty()) out.push_back(cell);
  }
  return out;
}

const ConfigKey& lookup(std::string_view key) {
  for (const auto& k : config_schema())
    if (k.name == key) return k;
  throw ConfigError("unknown configuration key '" + std::string(key) + "'");
}

}  // namespace

const std::vector<ConfigKey>& config_schema() {
  static const std::vector<ConfigKey> schema{
      {"eq", KeyType::variant, "equation: mkdv, mkdv1 or mkdv2"},
      {"sign", KeyType::sign, "nonlinearity sign, +1 or -1"},
      {"modes", KeyType::count, "mode cap M"},
      {"dt", KeyType::positive_real, "time step"},
      {"T", KeyType::positive_real, "final time"},
      {"ic", KeyType::preset, "initial-data preset, e.g. plane_wave:5,1,0.5"},
      {"stride", KeyType::count, "store every stride-th step"},
      {"seed", KeyType::count, "random seed"},
      {"out", KeyType::text, "output directory"},
      {"table", KeyType::boolean, "also print a human-readable table"},
      {"input", KeyType::text, "state file (.csv/.json) or trajectory directory"},
      {"gauge", KeyType::text, "G1 or G2"},
      {"P0", KeyType::real, "momentum scalar for G2 (defaults to the first slice)"},
      {"invert", KeyType::boolean, "apply the inverse gauge"},
      {"norms", KeyType::norm_list, "list of s:p pairs, p may be inf"},
      {"xsb", KeyType::text, "s:b:p:q for the space-time norm of a trajectory"},
      {"experiment", KeyType::text, "experiment name"},
      {"s", KeyType::real, "regularity exponent"},
      {"p", KeyType::positive_real, "integrability exponent"},
      {"alpha", KeyType::positive_real, "decay exponent of one-sided data"},
      {"data", KeyType::text, "nonexistence data: one_sided or symmetric"},
      {"schedule", KeyType::int_list, "truncation schedule N"},
      {"n_list", KeyType::int_list, "list of n"},
      {"N_rule", KeyType::text, "minimal or fixed:<N>"},
      {"phase_step", KeyType::positive_real, "nonlinear phase per step (illposedness)"},
      {"run_solver", KeyType::boolean, "compare against the solver (illposedness)"},
      {"samples", KeyType::count, "Monte Carlo samples"},
      {"N", KeyType::count, "truncation for random momentum"},
      {"real_only", KeyType::boolean, "conjugate-symmetric random data"},
      {"amplitudes", KeyType::real_list, "amplitude family (apriori)"},
      {"s_list", KeyType::real_list, "s values (multiplier), zipped with p_list"},
      {"p_list", KeyType::real_list, "p values (multiplier)"},
      {"K_list", KeyType::int_list, "truncation radii (multiplier)"},
      {"threshold.mass_tol", KeyType::positive_real, "conservation: relative mass drift"},
      {"threshold.momentum_tol", KeyType::positive_real, "conservation: absolute momentum drift"},
      {"threshold.tol", KeyType::positive_real, "gauge equivalence tolerance"},
      {"threshold.cauchy_shrink", KeyType::positive_real, "nonexistence: v-difference shrink factor"},
      {"threshold.separation", KeyType::positive_real, "nonexistence: u-difference floor / ||v||"},
      {"threshold.pairing_ratio", KeyType::positive_real, "nonexistence: pairing decay ratio"},
      {"threshold.control_pairing_ratio", KeyType::positive_real, "nonexistence: control pairing ratio"},
      {"threshold.solution_floor", KeyType::positive_real, "illposedness: distance at t_n"},
      {"threshold.solver_tol", KeyType::positive_real, "illposedness: solver agreement"},
      {"threshold.sigmas", KeyType::positive_real, "random momentum: standard errors"},
      {"threshold.slope_max", KeyType::real, "energy drift: fitted slope"},
      {"threshold.noise_floor", KeyType::positive_real, "energy drift: noise floor"},
      {"threshold.doubling_growth", KeyType::positive_real, "apriori: ratio growth"},
      {"threshold.stabilization", KeyType::positive_real, "multiplier: relative change"},
  };
  return schema;
}

std::string canonical_value(std::string_view key, std::string_view raw) {
  const ConfigKey& k = lookup(key);
  const std::string name(key);
  const std::string v = trim(raw);
  switch (k.type) {
    case KeyType::integer:
      return std::to_string(parse_int(key, v));
    case KeyType::count: {
      const auto x = parse_int(key, v);
      if (x < 0) throw ConfigError("'" + name + "' must be non-negative (got " + v + ")");
      return std::to_string(x);
    }
    case KeyType::real:
      return format_double(parse_real(key, v));
    case KeyType::positive_real: {
      const double x = parse_real(key, v);
      if (!(x > 0.0)) throw ConfigError("'" + name + "' must be positive (got " + v + ")");
      return format_double(x);
    }
    case KeyType::sign: {
      const auto x = parse_int(key, v);
      if (x != 1 && x != -1) throw ConfigError("'sign' must be +1 or -1 (got " + v + ")");
      return std::to_string(x);
    }
    case KeyType::variant: {
      const auto var = parse_variant(v);
      if (!var) throw ConfigError("unknown equation '" + v + "' (expected mkdv, mkdv1 or mkdv2)");
      return std::string(to_string(*var));
    }
    case KeyType::preset:
      return to_string(parse_preset(v));
    case KeyType::text:
      if (v.empty()) throw ConfigError("'" + name + "' must not be empty");
      return v;
    case KeyType::boolean: {
      std::string lower = v;
      std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
      if (lower == "true" || lower == "1" || lower == "yes") return "true";
      if (lower == "false" || lower == "0" || lower == "no") return "false";
      throw ConfigError("'" + name + "' must be true or false (got " + v + ")");
    }
    case KeyType::int_list: {
      std::string out;
      for (const auto& cell : split_list(v)) out += (out.empty() ? "" : ",") + std::to_string(parse_int(key, cell));
      return out;
    }
    case KeyType::real_list: {
      std::string out;
      for (const auto& cell : split_list(v)) out += (out.empty() ? "" : ",") + format_double(parse_real(key, cell));
      return out;
    }
    case KeyType::norm_list: {
      std::string out;
      for (const auto& cell : split_list(v)) {
        const auto colon = cell.find(':');
        if (colon == std::string::npos) throw ConfigError("norms entries must be s:p (got '" + cell + "')");
        const double s = parse_real(key, cell.substr(0, colon));
        const std::string ptext = trim(cell.substr(colon + 1));
        std::string pcanon;
        if (ptext == "inf") {
          pcanon = "inf";
        } else {
          const double p = parse_real(key, ptext);
          if (!(p >= 1.0)) throw ConfigError("norms: p must be >= 1 (got " + ptext + ")");
          pcanon = format_double(p);
        }
        out += (out.empty() ? "" : ",") + format_double(s) + ":" + pcanon;
      }
      if (out.empty()) throw ConfigError("'norms' must list at least one s:p pair");
      return out;
    }
  }
  throw ConfigError("unhandled key type");
}

std::map<std::string, std::string> parse_config_file(std::string_view body) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(body)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    out[key] = canonical_value(key, line.substr(eq + 1));
  }
  return out;
}

RunConfig resolve_config(const std::string& subcommand, const std::map<std::string, std::string>& file_values,
                         const std::map<std::string, std::string>& flag_values) {
  if (std::find(kSubcommands.begin(), kSubcommands.end(), subcommand) == kSubcommands.end()) {
    throw ConfigError("unknown subcommand '" + subcommand + "'");
  }
  RunConfig cfg;
  cfg.subcommand = subcommand;
  for (const auto& [k, v] : file_values) cfg.values[k] = canonical_value(k, v);
  for (const auto& [k, v] : flag_values) cfg.values[k] = canonical_value(k, v);

  auto require = [&](const char* key) {
    if (!cfg.has(key)) throw ConfigError("missing required field '" + std::string(key) + "' for " + subcommand);
  };
  if (subcommand == "solve") {
    require("ic");
    require("T");
    require("dt");
  } else if (subcommand == "gauge") {
    require("input");
    require("gauge");
    if (!parse_gauge(cfg.values["gauge"])) throw ConfigError("'gauge' must be G1 or G2");
    cfg.values["gauge"] = std::string(to_string(*parse_gauge(cfg.values["gauge"])));
  } else if (subcommand == "norms") {
    require("input");
  } else {
    require("experiment");
    const auto& name = cfg.values["experiment"];
    if (std::find(kExperiments.begin(), kExperiments.end(), name) == kExperiments.end()) {
      throw ConfigError("unknown experiment '" + name + "'");
    }
  }
  if (cfg.has("data") && cfg.values["data"] != "one_sided" && cfg.values["data"] != "symmetric") {
    throw ConfigError("'data' must be one_sided or symmetric");
  }
  return cfg;
}

std::string RunConfig::text(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw ConfigError("missing required field '" + key + "'");
  return it->second;
}

std::int64_t RunConfig::integer(const std::string& key) const { return parse_int(key, text(key)); }
double RunConfig::real(const std::string& key) const { return parse_real(key, text(key)); }
bool RunConfig::boolean(const std::string& key) const { return text(key) == "true"; }

std::vector<std::int64_t> RunConfig::ints(const std::string& key) const {
  std::vector<std::int64_t> out;
  for (const auto& cell : split_list(text(key))) out.push_back(parse_int(key, cell));
  return out;
}

std::vector<double> RunConfig::reals(const std::string& key) const {
  std::vector<double> out;
  for (const auto& cell : split_list(text(key))) out.push_back(parse_real(key, cell));
  return out;
}

Preset RunConfig::preset(const std::string& key) const { return parse_preset(text(key)); }

EquationSpec RunConfig::equation() const {
  return EquationSpec{*parse_variant(text_or("eq", "mkdv")), static_cast<int>(integer_or("sign", 1))};
}

std::string RunConfig::text_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? text(key) : fallback;
}
std::int64_t RunConfig::integer_or(const std::string& key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}
double RunConfig::real_or(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }
bool RunConfig::boolean_or(const std::string& key, bool fallback) const { return has(key) ? boolean(key) : fallback; }

std::string RunConfig::to_text() const {
  std::string out = "# " + subcommand + "\n";
  for (const auto& [k, v] : values) out += k + "=" + v + "\n";
  return out;
}

}  // namespace mkdv
