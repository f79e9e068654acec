#include "mkdv/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "mkdv/errors.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/parallel.hpp"
#include "mkdv/phase.hpp"
#include "mkdv/simd/kernels.hpp"

namespace mkdv {

std::int64_t phi_resonance(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  using wide = __int128;
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  if (std::max({std::abs(n1), std::abs(n2), std::abs(n3)}) > kLimit) {
    throw std::overflow_error("resonance function arguments exceed 2^40");
  }
  const wide value = wide{3} * (wide{n1} + n2) * (wide{n1} + n3) * (wide{n2} + n3);
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("resonance function value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

bool lambda_membership(std::int64_t n, std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  return n == n1 + n2 + n3 && (n1 + n2) != 0 && (n1 + n3) != 0 && (n2 + n3) != 0;
}

namespace {

// Adds the mKdV1/mKdV2 corrections to |u|^2 u_x and applies the sign.
void finish_rhs(const FourierState& u, const EquationSpec& eq, FourierState& out) {
  const int cap = u.mode_cap();
  if (eq.variant != Variant::mKdV) {
    const double mu = mass(u);
    const double p = eq.variant == Variant::mKdV2 ? momentum(u) : 0.0;
    for (int n = -cap; n <= cap; ++n) {
      // - mu (i n) u - i P u = -i (mu n + P) u
      const double factor = mu * n + p;
      const cplx c = u[n];
      out[n] -= cplx{-factor * c.imag(), factor * c.real()};
    }
  }
  if (eq.sign < 0) {
    const auto c = out.coeffs();
    simd::active_kernels().scale(-1.0, c.data(), c.size());
  }
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("equation sign must be +1 or -1");
}

}  // namespace

FourierState nonlinearity(const FourierState& state, const EquationSpec& eq) {
  check_sign(eq.sign);
  CubicProduct product(state.mode_cap());
  FourierState out(state.mode_cap(), state.time());
  product.abs2_dx(state, out);
  finish_rhs(state, eq, out);
  return out;
}

NonlinearityParts decompose_nonlinearity(const FourierState& state) {
  const int cap = state.mode_cap();
  if (cap > kMaxDirectModeCap) {
    throw NumericalError("direct decomposition is O(M^3) and limited to M <= " +
                         std::to_string(kMaxDirectModeCap) + " (got M = " + std::to_string(cap) +
                         "); use nonlinearity() for the pseudo-spectral path");
  }
  NonlinearityParts parts{FourierState(cap, state.time()), FourierState(cap, state.time()),
                          FourierState(cap, state.time()), FourierState(cap, state.time())};
  const double mu = mass(state);
  const double p = momentum(state);

  parallel_for(-cap, cap + 1, [&](std::ptrdiff_t idx) {
    const int n = static_cast<int>(idx);
    cplx acc{};
    for (int n1 = -cap; n1 <= cap; ++n1) {
      for (int n2 = -cap; n2 <= cap; ++n2) {
        const int n3 = n - n1 - n2;
        if (n3 < -cap || n3 > cap) continue;
        if (!lambda_membership(n, n1, n2, n3)) continue;
        acc += static_cast<double>(n3) * state[n1] * std::conj(state[-n2]) * state[n3];
      }
    }
    parts.nonresonant[n] = cplx{0.0, 1.0} * acc;
    parts.resonant[n] = cplx{0.0, static_cast<double>(n)} * std::norm(state[n]) * state[n];
    parts.momentum_part[n] = cplx{0.0, p} * state[n];
    parts.mean_part[n] = mu * cplx{0.0, static_cast<double>(n)} * state[n];
  });
  return parts;
}

namespace {

void check_j1_args(double p, std::int64_t radius) {
  if (!(p >= 1.0)) throw std::invalid_argument("j1_multiplier_sum requires p >= 1");
  if (radius < 0) throw std::invalid_argument("j1_multiplier_sum requires a non-negative radius");
}

double dual_exponent(double p) { return p == 1.0 ? std::numeric_limits<double>::infinity() : p / (p - 1.0); }

// Rows are summed independently and then combined in index order so the
// result does not depend on the worker count.
double combine_rows(const std::vector<double>& rows, bool take_max) {
  double total = 0.0;
  for (double r : rows) total = take_max ? std::max(total, r) : total + r;
  return total;
}

}  // namespace

double j1_multiplier_sum_reference(std::int64_t n, double s, double p, std::int64_t radius) {
  check_j1_args(p, radius);
  const double dual = dual_exponent(p);
  const bool take_max = std::isinf(dual);
  std::vector<double> rows(static_cast<std::size_t>(2 * radius + 1), 0.0);
  parallel_for(-radius, radius + 1, [&](std::ptrdiff_t n1) {
    double row = 0.0;
    for (std::int64_t n2 = -radius; n2 <= radius; ++n2) {
      const std::int64_t n3 = n - n1 - n2;
      if (!lambda_membership(n, n1, n2, n3)) continue;
      const double phi = std::abs(static_cast<double>(phi_resonance(n1, n2, n3)));
      const double base = std::pow(japanese_bracket(static_cast<double>(n)), s) *
                          std::abs(static_cast<double>(n3)) /
                          (std::sqrt(phi) * std::pow(japanese_bracket(static_cast<double>(n1)) *
                                                         japanese_bracket(static_cast<double>(n2)) *
                                                         japanese_bracket(static_cast<double>(n3)),
                                                     s));
      row = take_max ? std::max(row, base) : row + std::pow(base, dual);
    }
    rows[static_cast<std::size_t>(n1 + radius)] = row;
  });
  return combine_rows(rows, take_max);
}

double j1_multiplier_sum(std::int64_t n, double s, double p, std::int64_t radius) {
  check_j1_args(p, radius);
  const double dual = dual_exponent(p);
  const bool take_max = std::isinf(dual);
  // Every integer that appears (n_j, pairwise sums) has magnitude <= |n| + 2K.
  const std::int64_t span = std::abs(n) + 2 * radius;
  std::vector<double> log_abs(static_cast<std::size_t>(span + 1));
  std::vector<double> log_bracket(static_cast<std::size_t>(span + 1));
  for (std::int64_t m = 0; m <= span; ++m) {
    log_abs[static_cast<std::size_t>(m)] = m == 0 ? -std::numeric_limits<double>::infinity()
                                                  : std::log(static_cast<double>(m));
    log_bracket[static_cast<std::size_t>(m)] = 0.5 * std::log1p(static_cast<double>(m) * static_cast<double>(m));
  }
  auto la = [&](std::int64_t m) { return log_abs[static_cast<std::size_t>(m < 0 ? -m : m)]; };
  auto lb = [&](std::int64_t m) { return log_bracket[static_cast<std::size_t>(m < 0 ? -m : m)]; };
  const double head = s * lb(n) - 0.5 * std::log(3.0);

  std::vector<double> rows(static_cast<std::size_t>(2 * radius + 1), 0.0);
  parallel_for(-radius, radius + 1, [&](std::ptrdiff_t n1) {
    double row = 0.0;
    if (n1 == n) {
      rows[static_cast<std::size_t>(n1 + radius)] = row;
      return;
    }
    const double row_head = head - 0.5 * la(n - n1) - s * lb(n1);
    for (std::int64_t n2 = -radius; n2 <= radius; ++n2) {
      const std::int64_t n3 = n - n1 - n2;
      if (n1 + n2 == 0 || n - n2 == 0 || n - n1 == 0 || n3 == 0) continue;
      // log of <n>^s |n3| / (|Phi|^{1/2} prod <n_j>^s), Phi = 3 (n1+n2)(n1+n3)(n2+n3)
      const double log_base = row_head + la(n3) - 0.5 * (la(n1 + n2) + la(n - n2)) - s * (lb(n2) + lb(n3));
      row = take_max ? std::max(row, std::exp(log_base)) : row + std::exp(dual * log_base);
    }
    rows[static_cast<std::size_t>(n1 + radius)] = row;
  });
  return combine_rows(rows, take_max);
}

FourierState linear_propagator(const FourierState& state, double t) {
  FourierState out = state;
  const int cap = state.mode_cap();
  for (int n = -cap; n <= cap; ++n) {
    const auto cube = static_cast<std::int64_t>(n) * n * n;
    out[n] = state[n] * unit_phase(cube, t);
  }
  out.set_time(state.time() + t);
  return out;
}

Stepper::Stepper(int mode_cap, EquationSpec eq, double dt)
    : mode_cap_(mode_cap),
      eq_(eq),
      dt_(dt),
      product_(mode_cap),
      k1_(mode_cap),
      k2_(mode_cap),
      k3_(mode_cap),
      k4_(mode_cap),
      stage_(mode_cap),
      base_(mode_cap) {
  check_sign(eq.sign);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive and finite");
  half_phase_.resize(2 * static_cast<std::size_t>(mode_cap) + 1);
  full_phase_.resize(half_phase_.size());
  for (int n = -mode_cap; n <= mode_cap; ++n) {
    const auto cube = static_cast<std::int64_t>(n) * n * n;
    half_phase_[static_cast<std::size_t>(n + mode_cap)] = unit_phase(cube, 0.5 * dt);
    full_phase_[static_cast<std::size_t>(n + mode_cap)] = unit_phase(cube, dt);
  }
}

void Stepper::rhs(const FourierState& state, FourierState& out) {
  product_.abs2_dx(state, out);
  finish_rhs(state, eq_, out);
}

void Stepper::apply_phase(const std::vector<cplx>& phase, FourierState& state) const {
  auto c = state.coeffs();
  simd::active_kernels().mul(phase.data(), c.data(), c.data(), c.size());
}

void Stepper::advance(FourierState& state) {
  if (state.mode_cap() != mode_cap_) throw std::invalid_argument("state mode cap does not match stepper");
  if (!state.is_finite()) throw NumericalError("non-finite coefficients in state at t = " + std::to_string(state.time()));
  const auto& k = simd::active_kernels();
  const std::size_t len = state.size();
  const double h = dt_;
  const double t0 = state.time();
  auto raw = [](FourierState& s) { return s.coeffs().data(); };

  rhs(state, k1_);

  stage_ = state;
  k.axpy(0.5 * h, raw(k1_), raw(stage_), len);
  apply_phase(half_phase_, stage_);
  stage_.set_time(t0 + 0.5 * h);
  rhs(stage_, k2_);

  base_ = state;
  apply_phase(half_phase_, base_);
  stage_ = base_;
  k.axpy(0.5 * h, raw(k2_), raw(stage_), len);
  rhs(stage_, k3_);

  stage_ = state;
  apply_phase(full_phase_, stage_);
  apply_phase(half_phase_, k3_);
  k.axpy(h, raw(k3_), raw(stage_), len);
  stage_.set_time(t0 + h);
  rhs(stage_, k4_);

  // u_new = E u + h/6 E k1 + h/3 E_half (k2 + k3_unphased) + h/6 k4; k3_ already carries E_half.
  apply_phase(full_phase_, state);
  apply_phase(full_phase_, k1_);
  apply_phase(half_phase_, k2_);
  k.axpy(h / 6.0, raw(k1_), raw(state), len);
  k.axpy(h / 3.0, raw(k2_), raw(state), len);
  k.axpy(h / 3.0, raw(k3_), raw(state), len);
  k.axpy(h / 6.0, raw(k4_), raw(state), len);
  state.set_time(t0 + h);
  if (!state.is_finite()) throw NumericalError("integration produced non-finite values at t = " + std::to_string(t0 + h));
}

FourierState step(const FourierState& state, const EquationSpec& eq, double dt) {
  Stepper stepper(state.mode_cap(), eq, dt);
  FourierState out = state;
  stepper.advance(out);
  return out;
}

double stable_dt_bound(const FourierState& state) {
  const GridFunction grid = to_physical(state, dealiased_grid_size(state.mode_cap()));
  double peak = 0.0;
  for (const cplx& v : grid.samples) peak = std::max(peak, std::norm(v));
  return 0.5 / (state.mode_cap() * peak + 1.0);
}

Trajectory solve(const FourierState& ic, const EquationSpec& eq, double T, double dt,
                 const SolveOptions& options) {
  if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("final time T must be positive");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive");
  const auto steps = static_cast<std::size_t>(std::llround(T / dt));
  if (steps == 0 || std::abs(static_cast<double>(steps) * dt - T) > 1e-9 * T) {
    throw std::invalid_argument("time step must divide T");
  }
  const std::size_t stride = options.sample_stride;
  if (stride == 0 || steps % stride != 0) {
    throw std::invalid_argument("sample stride must divide the number of steps");
  }
  if (!ic.is_finite()) throw NumericalError("initial condition has non-finite coefficients");

  Stepper stepper(ic.mode_cap(), eq, dt);
  Trajectory traj;
  traj.equation = eq;
  traj.step_dt = dt;
  traj.sample_dt = dt * static_cast<double>(stride);
  traj.mode_cap = ic.mode_cap();
  traj.grid_size = stepper.grid_size();
  traj.states.reserve(steps / stride + 1);
  traj.states.push_back(ic);

  const double bound = stable_dt_bound(ic);
  if (dt > bound) {
    std::ostringstream msg;
    msg << "dt = " << dt << " exceeds the stability heuristic 0.5/(M max|u|^2 + 1) = " << bound;
    traj.warnings.push_back(msg.str());
  }

  const double t0 = ic.time();
  FourierState current = ic;
  double previous_mass = mass(current);
  for (std::size_t i = 1; i <= steps; ++i) {
    try {
      stepper.advance(current);
    } catch (const NumericalError& e) {
      throw SolverAbort(e.what(), std::move(traj));
    }
    current.set_time(t0 + static_cast<double>(i) * dt);
    const double m = mass(current);
    const double drift = std::abs(m - previous_mass) / std::max(previous_mass, 1e-300);
    if (previous_mass > 0.0 && drift > options.max_step_mass_drift) {
      std::ostringstream msg;
      msg << "instability: mass changed by a fraction " << drift << " in one step at t = " << current.time();
      traj.states.push_back(current);
      throw SolverAbort(msg.str(), std::move(traj));
    }
    previous_mass = m;
    if (i % stride == 0) traj.states.push_back(current);
  }
  return traj;
}

std::vector<double> residual_check(const Trajectory& traj) {
  if (traj.size() < 3) throw std::invalid_argument("residual_check needs at least 3 samples");
  const double dt = traj.sample_dt;
  if (!(dt > 0.0)) throw std::invalid_argument("residual_check needs a positive sample spacing");
  const int cap = traj.mode_cap;
  CubicProduct product(cap);
  std::vector<double> out;
  out.reserve(traj.size() - 2);
  FourierState rhs(cap);
  for (std::size_t k = 1; k + 1 < traj.size(); ++k) {
    const FourierState& u = traj.states[k];
    product.abs2_dx(u, rhs);
    finish_rhs(u, traj.equation, rhs);
    FourierState r(cap);
    for (int n = -cap; n <= cap; ++n) {
      const double cube = static_cast<double>(n) * n * n;
      // d_t u + (i n)^3 u - F = d_t u - i n^3 u - F
      r[n] = (traj.states[k + 1][n] - traj.states[k - 1][n]) / (2.0 * dt) - cplx{0.0, cube} * u[n] - rhs[n];
    }
    out.push_back(fl_norm(r, 0.0, 2.0));
  }
  return out;
}

}  // namespace mkdv
