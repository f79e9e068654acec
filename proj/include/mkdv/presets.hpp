#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mkdv/fourier_state.hpp"

namespace mkdv {

/// Named initial-data families. Text form is "name" or "name:v1,v2,...":
///   zero
///   plane_wave:N,a,s            c(N) = N^{-s} a
///   gaussian_bump:width,amp[,k0] periodized amp e^{-(x-pi)^2/(2 width^2)} e^{i k0 x}, k0 defaults to 1
///   random_smooth:decay,seed[,modes,amp]  `modes` active modes +-1..+-modes/2 (default 8),
///                               |c(n)| <= amp e^{-decay(|n|-1)} (amp defaults to 0.5), random phases
///   one_sided:alpha             c(n) = n^{-alpha} for 1 <= n <= M
///   symmetric:alpha             c(n) = |n|^{-alpha} for 1 <= |n| <= M (real-valued control data)
struct Preset {
  enum class Kind { zero, plane_wave, gaussian_bump, random_smooth, one_sided, symmetric };
  Kind kind = Kind::zero;
  std::vector<double> args;

  friend bool operator==(const Preset&, const Preset&) = default;
};

/// Throws ConfigError on unknown names or wrong argument counts.
Preset parse_preset(std::string_view text);
std::string to_string(const Preset& preset);

/// Builds the initial state with mode cap M at time 0. Throws ConfigError when
/// the preset does not fit (e.g. plane_wave with N > M).
FourierState make_initial_state(const Preset& preset, int mode_cap);

}  // namespace mkdv
