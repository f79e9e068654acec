#include "mkdv/norms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mkdv/fft.hpp"
#include "mkdv/simd/kernels.hpp"
#include "mkdv/spectral.hpp"

namespace mkdv {

void NormSpec::validate() const {
  if (std::isnan(s) || std::isnan(p) || std::isnan(b) || std::isnan(q)) {
    throw std::invalid_argument("norm parameters must not be NaN");
  }
  if (p < 1.0) throw std::invalid_argument("norm exponent p must be >= 1");
  if (q < 1.0) throw std::invalid_argument("norm exponent q must be >= 1");
}

double fl_norm(const FourierState& state, const NormSpec& spec) {
  spec.validate();
  const int cap = state.mode_cap();
  if (std::isinf(spec.p)) {
    double sup = 0.0;
    for (int n = -cap; n <= cap; ++n) {
      sup = std::max(sup, std::pow(japanese_bracket(n), spec.s) * std::abs(state[n]));
    }
    return sup;
  }
  if (spec.s == 0.0 && spec.p == 2.0) return std::sqrt(mass(state));
  double total = 0.0;
  for (int n = -cap; n <= cap; ++n) {
    const double a = std::abs(state[n]);
    if (a == 0.0) continue;
    total += std::pow(japanese_bracket(n), spec.s * spec.p) * std::pow(a, spec.p);
  }
  return std::pow(total, 1.0 / spec.p);
}

double fl_norm(const FourierState& state, double s, double p) {
  return fl_norm(state, NormSpec{s, p});
}

double mass(const FourierState& state) {
  const auto c = state.coeffs();
  return simd::active_kernels().sum_abs2(c.data(), c.size());
}

double momentum(const FourierState& state) {
  double total = 0.0;
  for (int n = 1; n <= state.mode_cap(); ++n) {
    total += n * (std::norm(state[n]) - std::norm(state[-n]));
  }
  return total;
}

double truncated_momentum(const FourierState& state, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("momentum cutoff must be non-negative");
  double total = 0.0;
  const int top = std::min(cutoff, state.mode_cap());
  for (int n = 1; n <= top; ++n) total += n * (std::norm(state[n]) - std::norm(state[-n]));
  return total;
}

std::string to_string(MomentumVerdict v) {
  switch (v) {
    case MomentumVerdict::converged:
      return "converged";
    case MomentumVerdict::diverging:
      return "diverging";
    case MomentumVerdict::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

MomentumSeries momentum_limit_diagnostic(const FourierState& state, const std::vector<int>& schedule,
                                         double tol) {
  if (schedule.size() < 4) throw std::invalid_argument("momentum schedule needs at least 4 entries");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] < 0 || (i > 0 && schedule[i] <= schedule[i - 1])) {
      throw std::invalid_argument("momentum schedule must be non-negative and strictly increasing");
    }
  }
  MomentumSeries series;
  series.tol = tol;
  for (int cutoff : schedule) series.truncations.emplace_back(cutoff, truncated_momentum(state, cutoff));

  const auto& tr = series.truncations;
  const std::size_t m = tr.size();
  const double last = tr.back().second;
  const double bar = tol * (1.0 + std::abs(last));
  bool settled = true;
  for (std::size_t i = m - 3; i < m; ++i) {
    if (std::abs(tr[i].second - tr[i - 1].second) >= bar) settled = false;
  }
  const double first_step = std::abs(tr[1].second - tr[0].second);
  const double last_step = std::abs(tr[m - 1].second - tr[m - 2].second);
  if (settled) {
    series.verdict = MomentumVerdict::converged;
    series.limit = last;
  } else if (std::abs(last) >= 2.0 * std::abs(tr.front().second) && last_step >= first_step) {
    series.verdict = MomentumVerdict::diverging;
  } else {
    series.verdict = MomentumVerdict::undetermined;
  }
  return series;
}

double raised_cosine(double r) {
  const double v = std::sin(std::numbers::pi * r);
  return v * v;
}

double xsb_norm(const Trajectory& traj, const NormSpec& spec, XsbInfo* info) {
  spec.validate();
  if (std::isinf(spec.p)) throw std::invalid_argument("xsb_norm requires finite p");
  const std::size_t samples = traj.size();
  if (samples < 8) throw std::invalid_argument("xsb_norm needs at least 8 time samples");
  if (!(traj.sample_dt > 0.0)) throw std::invalid_argument("xsb_norm needs a positive sample spacing");

  const int cap = traj.mode_cap;
  const double dt = traj.sample_dt;
  const std::size_t padded = fft::good_size(4 * samples);
  const double dtau = 2.0 * std::numbers::pi / (static_cast<double>(padded) * dt);
  const double scale = dt / (2.0 * std::numbers::pi);

  std::vector<FourierState> free_frame;
  free_frame.reserve(samples);
  for (const auto& slice : traj.states) free_frame.push_back(interaction_representation(slice));

  std::vector<double> tau_weight(padded);
  for (std::size_t j = 0; j < padded; ++j) {
    const auto signed_j = static_cast<double>(j < (padded + 1) / 2 ? static_cast<std::ptrdiff_t>(j)
                                                                     : static_cast<std::ptrdiff_t>(j) -
                                                                           static_cast<std::ptrdiff_t>(padded));
    tau_weight[j] = std::pow(japanese_bracket(signed_j * dtau), spec.b);
  }

  fft::Workspace ws(padded);
  double outer = 0.0;
  for (int n = -cap; n <= cap; ++n) {
    auto buf = ws.data();
    std::fill(buf.begin(), buf.end(), cplx{});
    bool any = false;
    for (std::size_t k = 0; k < samples; ++k) {
      const double w = raised_cosine(static_cast<double>(k) / static_cast<double>(samples - 1));
      buf[k] = w * free_frame[k][n];
      any = any || buf[k] != cplx{};
    }
    if (!any) continue;
    ws.forward();
    double inner = 0.0;
    if (std::isinf(spec.q)) {
      for (std::size_t j = 0; j < padded; ++j) inner = std::max(inner, tau_weight[j] * scale * std::abs(buf[j]));
    } else {
      for (std::size_t j = 0; j < padded; ++j) {
        inner += std::pow(tau_weight[j] * scale * std::abs(buf[j]), spec.q);
      }
      inner = std::pow(inner * dtau, 1.0 / spec.q);
    }
    outer += std::pow(japanese_bracket(n), spec.s * spec.p) * std::pow(inner, spec.p);
  }
  if (info != nullptr) {
    info->samples = samples;
    info->padded_length = padded;
    info->tau_spacing = dtau;
  }
  return std::pow(outer, 1.0 / spec.p);
}

}  // namespace mkdv
