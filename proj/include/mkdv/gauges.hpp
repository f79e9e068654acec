#pragma once

#include "mkdv/trajectory.hpp"

namespace mkdv {

/// G1(u)(t, x) = u(t, x - sign mu t) with mu the mass of the first slice,
/// realized as the modulation c(n) -> e^{-i n sign mu t} c(n).
Trajectory apply_gauge1(const Trajectory& traj, int sign);

/// G2(u)(t) = e^{-i sign P0 t} u(t).
Trajectory apply_gauge2(const Trajectory& traj, int sign, double P0);

/// Applies any gauge with an explicit scalar, recording it on the result.
Trajectory apply_gauge(const Trajectory& traj, const GaugeSpec& spec);

/// Exact inverse of apply_gauge. If the trajectory records gauges, the most
/// recent one must equal `spec` (std::invalid_argument otherwise) and is
/// removed; on an ungauged trajectory the inverse map is applied and recorded.
Trajectory invert_gauge(const Trajectory& traj, const GaugeSpec& spec);

}  // namespace mkdv
