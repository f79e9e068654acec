#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mkdv/presets.hpp"
#include "mkdv/trajectory.hpp"

namespace mkdv {

enum class KeyType { integer, count, real, positive_real, sign, variant, preset, text, boolean, int_list, real_list,
                     norm_list };

struct ConfigKey {
  std::string_view name;
  KeyType type;
  std::string_view help;
};

/// Every accepted configuration key. Threshold overrides are spelled
/// "threshold.<name>" and are listed here as well.
const std::vector<ConfigKey>& config_schema();

/// Fully resolved run configuration. Values are stored in canonical text
/// form, so two configs that mean the same thing compare equal.
struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  /// Typed getters; throw ConfigError naming the key when it is missing.
  std::string text(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  double real(const std::string& key) const;
  bool boolean(const std::string& key) const;
  std::vector<std::int64_t> ints(const std::string& key) const;
  std::vector<double> reals(const std::string& key) const;
  Preset preset(const std::string& key) const;
  EquationSpec equation() const;

  std::string text_or(const std::string& key, const std::string& fallback) const;
  std::int64_t integer_or(const std::string& key, std::int64_t fallback) const;
  double real_or(const std::string& key, double fallback) const;
  bool boolean_or(const std::string& key, bool fallback) const;

  /// Flat "key=value" lines accepted back by parse_config_file.
  std::string to_text() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Validates one value for `key` and returns its canonical text. Throws
/// ConfigError for unknown keys and malformed or out-of-range values.
std::string canonical_value(std::string_view key, std::string_view value);

/// Parses a flat key=value file body ('#' starts a comment).
std::map<std::string, std::string> parse_config_file(std::string_view body);

/// Merges file values (lower precedence) with flag values and validates the
/// result for `subcommand`, including required fields.
RunConfig resolve_config(const std::string& subcommand, const std::map<std::string, std::string>& file_values,
                         const std::map<std::string, std::string>& flag_values);

}  // namespace mkdv
