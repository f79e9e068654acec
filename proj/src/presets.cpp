#include "mkdv/presets.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "mkdv/errors.hpp"
#include "mkdv/serialization.hpp"

namespace mkdv {
namespace {

struct KindInfo {
  Preset::Kind kind;
  std::string_view name;
  std::size_t min_args;
  std::size_t max_args;
};

constexpr KindInfo kKinds[] = {
    {Preset::Kind::zero, "zero", 0, 0},
    {Preset::Kind::plane_wave, "plane_wave", 3, 3},
    {Preset::Kind::gaussian_bump, "gaussian_bump", 2, 3},
    {Preset::Kind::random_smooth, "random_smooth", 2, 4},
    {Preset::Kind::one_sided, "one_sided", 1, 1},
    {Preset::Kind::symmetric, "symmetric", 1, 1},
};

const KindInfo& info(Preset::Kind kind) {
  for (const auto& k : kKinds)
    if (k.kind == kind) return k;
  throw ConfigError("unknown preset kind");
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

void validate(const Preset& p) {
  const auto& a = p.args;
  for (double v : a)
    if (!std::isfinite(v)) throw ConfigError("preset arguments must be finite");
  switch (p.kind) {
    case Preset::Kind::plane_wave:
      if (!is_integer(a[0])) throw ConfigError("plane_wave: N must be an integer");
      break;
    case Preset::Kind::gaussian_bump:
      if (!(a[0] > 0)) throw ConfigError("gaussian_bump: width must be positive");
      if (a.size() > 2 && !is_integer(a[2])) throw ConfigError("gaussian_bump: k0 must be an integer");
      break;
    case Preset::Kind::random_smooth:
      if (!(a[0] >= 0)) throw ConfigError("random_smooth: decay must be non-negative");
      if (!is_integer(a[1]) || a[1] < 0) throw ConfigError("random_smooth: seed must be a non-negative integer");
      if (a.size() > 2 && (!is_integer(a[2]) || a[2] < 2 || std::fmod(a[2], 2.0) != 0.0))
        throw ConfigError("random_smooth: modes must be a positive even integer");
      if (a.size() > 3 && !(a[3] >= 0)) throw ConfigError("random_smooth: amp must be non-negative");
      break;
    default:
      break;
  }
}

}  // namespace

Preset parse_preset(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const KindInfo* found = nullptr;
  for (const auto& k : kKinds)
    if (k.name == name) found = &k;
  if (!found) throw ConfigError("unknown initial-data preset '" + std::string(name) + "'");
  Preset p{found->kind, {}};
  if (colon != std::string_view::npos) {
    std::string rest(text.substr(colon + 1));
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string cell = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      try {
        std::size_t used = 0;
        p.args.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ConfigError("malformed preset argument '" + cell + "' in '" + std::string(text) + "'");
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (p.args.size() < found->min_args || p.args.size() > found->max_args) {
    throw ConfigError("preset '" + std::string(name) + "' takes " + std::to_string(found->min_args) +
                      (found->max_args != found->min_args ? "-" + std::to_string(found->max_args) : "") +
                      " arguments");
  }
  validate(p);
  return p;
}

std::string to_string(const Preset& preset) {
  std::string out(info(preset.kind).name);
  for (std::size_t i = 0; i < preset.args.size(); ++i) {
    out += i == 0 ? ':' : ',';
    out += io::format_double(preset.args[i]);
  }
  return out;
}

FourierState make_initial_state(const Preset& preset, int mode_cap) {
  if (mode_cap < 0) throw ConfigError("mode cap must be non-negative");
  validate(preset);
  const auto& a = preset.args;
  FourierState u(mode_cap);
  switch (preset.kind) {
    case Preset::Kind::zero:
      break;
    case Preset::Kind::plane_wave: {
      const int n = static_cast<int>(a[0]);
      if (std::abs(n) > mode_cap) throw ConfigError("plane_wave: |N| exceeds the mode cap");
      const double scale = n == 0 ? 1.0 : std::pow(std::abs(static_cast<double>(n)), -a[2]);
      u[n] = scale * a[1];
      break;
    }
    case Preset::Kind::gaussian_bump: {
      // Fourier series of the periodized Gaussian centred at pi, shifted by k0.
      const double w = a[0];
      const double amp = a[1];
      const int k0 = a.size() > 2 ? static_cast<int>(a[2]) : 1;
      for (int n = -mode_cap; n <= mode_cap; ++n) {
        const int m = n - k0;
        const double g = amp * w / std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * m * m * w * w);
        u[n] = (m % 2 == 0) ? g : -g;
      }
      break;
    }
    case Preset::Kind::random_smooth: {
      const double decay = a[0];
      std::mt19937_64 rng(static_cast<std::uint64_t>(a[1]));
      const int modes = a.size() > 2 ? static_cast<int>(a[2]) : 8;
      const double amp = a.size() > 3 ? a[3] : 0.5;
      if (modes / 2 > mode_cap) throw ConfigError("random_smooth: active modes exceed the mode cap");
      // Raw 53-bit draws keep the data identical across standard libraries.
      auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
      for (int k = 1; k <= modes / 2; ++k) {
        for (int n : {k, -k}) {
          const double r = amp * std::exp(-decay * (k - 1)) * uniform();
          u[n] = std::polar(r, 2.0 * std::numbers::pi * uniform());
        }
      }
      break;
    }
    case Preset::Kind::one_sided:
      for (int n = 1; n <= mode_cap; ++n) u[n] = std::pow(static_cast<double>(n), -a[0]);
      break;
    case Preset::Kind::symmetric:
      for (int n = 1; n <= mode_cap; ++n) u[n] = u[-n] = std::pow(static_cast<double>(n), -a[0]);
      break;
  }
  return u;
}

}  // namespace mkdv
