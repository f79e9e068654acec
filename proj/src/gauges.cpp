#include "mkdv/gauges.hpp"

#include <cstdint>
#include <stdexcept>

#include "mkdv/norms.hpp"
#include "mkdv/phase.hpp"

namespace mkdv {
namespace {

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("gauge sign must be +1 or -1");
}

// direction = +1 applies the gauge, -1 its inverse.
void transform_slices(Trajectory& traj, const GaugeSpec& spec, int direction) {
  const double rate = -direction * spec.sign * spec.scalar;
  for (FourierState& slice : traj.states) {
    const double t = slice.time();
    const int cap = slice.mode_cap();
    if (spec.which == GaugeKind::G1) {
      for (int n = -cap; n <= cap; ++n) slice[n] *= std::polar(1.0, reduced_phase(n, rate * t));
    } else {
      const cplx factor = std::polar(1.0, reduced_phase(1, rate * t));
      for (int n = -cap; n <= cap; ++n) slice[n] *= factor;
    }
  }
}

void relabel(Trajectory& traj, const GaugeSpec& spec, int direction) {
  if (traj.equation.sign != spec.sign) return;
  Variant& v = traj.equation.variant;
  if (spec.which == GaugeKind::G1) {
    if (direction > 0 && v == Variant::mKdV) v = Variant::mKdV1;
    else if (direction < 0 && v == Variant::mKdV1) v = Variant::mKdV;
  } else {
    if (direction > 0 && v == Variant::mKdV1) v = Variant::mKdV2;
    else if (direction < 0 && v == Variant::mKdV2) v = Variant::mKdV1;
  }
}

}  // namespace

Trajectory apply_gauge(const Trajectory& traj, const GaugeSpec& spec) {
  check_sign(spec.sign);
  Trajectory out = traj;
  transform_slices(out, spec, +1);
  relabel(out, spec, +1);
  out.gauges.push_back({spec, false});
  return out;
}

Trajectory apply_gauge1(const Trajectory& traj, int sign) {
  if (traj.states.empty()) throw std::invalid_argument("apply_gauge1 needs a non-empty trajectory");
  return apply_gauge(traj, GaugeSpec{GaugeKind::G1, sign, mass(traj.states.front())});
}

Trajectory apply_gauge2(const Trajectory& traj, int sign, double P0) {
  return apply_gauge(traj, GaugeSpec{GaugeKind::G2, sign, P0});
}

Trajectory invert_gauge(const Trajectory& traj, const GaugeSpec& spec) {
  check_sign(spec.sign);
  Trajectory out = traj;
  if (!out.gauges.empty()) {
    const AppliedGauge& last = out.gauges.back();
    if (last.spec != spec) {
      throw std::invalid_argument("invert_gauge: spec does not match the most recently applied gauge");
    }
    transform_slices(out, spec, last.inverse ? +1 : -1);
    relabel(out, spec, last.inverse ? +1 : -1);
    out.gauges.pop_back();
    return out;
  }
  transform_slices(out, spec, -1);
  relabel(out, spec, -1);
  out.gauges.push_back({spec, true});
  return out;
}

}  // namespace mkdv
