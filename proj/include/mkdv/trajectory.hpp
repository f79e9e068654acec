#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mkdv/fourier_state.hpp"

namespace mkdv {

/// mKdV:  u_t + u_xxx = sign |u|^2 u_x
/// mKdV1: u_t + u_xxx = sign (|u|^2 - mu) u_x
/// mKdV2: u_t + u_xxx = sign ((|u|^2 - mu) u_x - i P(u) u)
enum class Variant { mKdV, mKdV1, mKdV2 };

struct EquationSpec {
  Variant variant = Variant::mKdV;
  int sign = 1;  ///< +1 or -1; no physical naming is attached.

  friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

std::string_view to_string(Variant v);
/// Accepts "mkdv", "mkdv1", "mkdv2" (case-insensitive).
std::optional<Variant> parse_variant(std::string_view text);

enum class GaugeKind { G1, G2 };

std::string_view to_string(GaugeKind g);
std::optional<GaugeKind> parse_gauge(std::string_view text);

/// G1 translates by -sign * mu * t (scalar = mu); G2 multiplies by
/// e^{-i sign P t} (scalar = P).
struct GaugeSpec {
  GaugeKind which = GaugeKind::G1;
  int sign = 1;
  double scalar = 0.0;

  friend bool operator==(const GaugeSpec&, const GaugeSpec&) = default;
};

struct AppliedGauge {
  GaugeSpec spec;
  bool inverse = false;

  friend bool operator==(const AppliedGauge&, const AppliedGauge&) = default;
};

/// Uniformly sampled solution history plus solver metadata.
struct Trajectory {
  std::vector<FourierState> states;
  EquationSpec equation;
  double sample_dt = 0.0;  ///< spacing between stored states
  double step_dt = 0.0;    ///< integrator step
  int mode_cap = 0;
  std::size_t grid_size = 0;  ///< padded physical grid used by the solver
  std::vector<AppliedGauge> gauges;
  std::vector<std::string> warnings;

  std::size_t size() const { return states.size(); }
  double final_time() const { return states.empty() ? 0.0 : states.back().time(); }
};

/// v(t) = S(-t) u(t) for a single slice.
FourierState interaction_representation(const FourierState& slice);

}  // namespace mkdv
