#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mkdv/dynamics.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/presets.hpp"
#include "oracles.hpp"

using namespace mkdv;

TEST(FlNorm, MatchesDirectSum) {
  const auto u = oracle::random_state(20, 20, 1.0, 4);
  for (double s : {-0.5, 0.0, 0.25, 0.5, 1.0, 2.0}) {
    for (double p : {1.0, 1.5, 2.0, 3.0, 8.0, NormSpec::infinity}) {
      const double ref = static_cast<double>(oracle::fl_norm(u, s, p));
      EXPECT_NEAR(fl_norm(u, s, p), ref, 1e-13 * ref) << s << ' ' << p;
    }
  }
}

TEST(FlNorm, SingleModeAndZero) {
  const auto u = FourierState::single_mode(8, 5, cplx{0.0, 2.0});
  EXPECT_NEAR(fl_norm(u, 0.5, 3.0), std::pow(26.0, 0.25) * 2.0, 1e-14);
  EXPECT_EQ(fl_norm(FourierState(4), 1.0, 2.0), 0.0);
  EXPECT_EQ(fl_norm(FourierState(4), 1.0, NormSpec::infinity), 0.0);
}

TEST(FlNorm, RejectsBadExponents) {
  EXPECT_THROW(fl_norm(FourierState(2), 0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(fl_norm(FourierState(2), std::nan(""), 2.0), std::invalid_argument);
}

TEST(FlNorm, L2IsSqrtMass) {
  const auto u = oracle::random_state(15, 15, 1.0, 2);
  EXPECT_DOUBLE_EQ(fl_norm(u, 0.0, 2.0), std::sqrt(mass(u)));
  EXPECT_NEAR(mass(u), static_cast<double>(oracle::mass(u)), 1e-14 * mass(u));
}

TEST(Momentum, MatchesDirectSumAndVanishesOnRealData) {
  const auto u = oracle::random_state(30, 30, 1.0, 6);
  EXPECT_NEAR(momentum(u), static_cast<double>(oracle::momentum(u)), 1e-12);
  auto r = u;
  for (int n = 1; n <= 30; ++n) r[-n] = std::conj(r[n]);
  EXPECT_EQ(momentum(r), 0.0);
  EXPECT_EQ(momentum(FourierState::single_mode(10, 5, 2.0)), 20.0);
}

TEST(Momentum, TruncationsAgreeWithProjection) {
  const auto u = oracle::random_state(12, 12, 1.0, 8);
  for (int N = 0; N <= 14; ++N) EXPECT_DOUBLE_EQ(truncated_momentum(u, N), momentum(project_low(u, N)));
  EXPECT_THROW(truncated_momentum(u, -1), std::invalid_argument);
}

TEST(MomentumDiagnostic, OneSidedDivergentData) {
  // c(n) = n^{-0.9}: P_N = sum n^{-0.8}, divergent.
  const auto u = make_initial_state(parse_preset("one_sided:0.9"), 512);
  const auto series = momentum_limit_diagnostic(u, {32, 64, 128, 256, 512});
  EXPECT_EQ(series.verdict, MomentumVerdict::diverging);
  EXPECT_NEAR(series.truncations[0].second, 5.5935813864477, 1e-9);
  const auto wide = make_initial_state(parse_preset("one_sided:0.9"), 4096);
  const auto dyadic = momentum_limit_diagnostic(wide, {16, 32, 64, 128, 256, 512, 1024, 2048, 4096});
  EXPECT_EQ(dyadic.verdict, MomentumVerdict::diverging);
  // The short schedule grows by less than 2x: not converged, not yet diverging.
  EXPECT_EQ(momentum_limit_diagnostic(u, {32, 64, 128, 256}).verdict, MomentumVerdict::undetermined);
}

TEST(MomentumDiagnostic, ConvergentData) {
  // c(n) = n^{-2} one-sided: P_N = sum n^{-3} converges to zeta(3).
  auto u = FourierState(4096);
  for (int n = 1; n <= 4096; ++n) u[n] = 1.0 / (static_cast<double>(n) * n);
  const auto series = momentum_limit_diagnostic(u, {512, 1024, 2048, 4096}, 1e-5);
  EXPECT_EQ(series.verdict, MomentumVerdict::converged);
  EXPECT_NEAR(series.limit, 1.2020569031595942, 1e-6);
}

TEST(MomentumDiagnostic, RealDataConvergesToZero) {
  const auto u = make_initial_state(parse_preset("symmetric:0.9"), 256);
  const auto series = momentum_limit_diagnostic(u, {16, 32, 64, 128});
  EXPECT_EQ(series.verdict, MomentumVerdict::converged);
  EXPECT_EQ(series.limit, 0.0);
}

TEST(MomentumDiagnostic, ScheduleValidation) {
  const FourierState u(16);
  EXPECT_THROW(momentum_limit_diagnostic(u, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(momentum_limit_diagnostic(u, {1, 2, 2, 4}), std::invalid_argument);
}

namespace {

Trajectory free_trajectory(const FourierState& u0, double dt, int samples) {
  Trajectory t;
  t.mode_cap = u0.mode_cap();
  t.sample_dt = dt;
  for (int k = 0; k < samples; ++k) t.states.push_back(linear_propagator(u0, k * dt));
  return t;
}

}  // namespace

TEST(Xsb, FreeSolutionFactorizesByParseval) {
  const auto u0 = oracle::random_state(8, 8, 1.0, 5);
  const double dt = 0.01;
  const int samples = 101;
  const auto traj = free_trajectory(u0, dt, samples);
  double w2 = 0.0;
  for (int k = 0; k < samples; ++k) w2 += std::pow(raised_cosine(k / double(samples - 1)), 2);
  const double window = std::sqrt(dt / (2 * std::numbers::pi) * w2);
  for (double s : {0.0, 0.5, 1.0}) {
    const double x = xsb_norm(traj, NormSpec{s, 2.0, 0.0, 2.0});
    EXPECT_NEAR(x, fl_norm(u0, s, 2.0) * window, 1e-12 * x) << s;
  }
  // Continuous limit of the window factor: (1/2pi) int_0^T sin^4(pi t/T) dt = 3T/(16 pi).
  EXPECT_NEAR(window, std::sqrt(3.0 * 1.0 / (16 * std::numbers::pi)), 1e-3);
}

TEST(Xsb, FreeSolutionConcentratesOnTheCubicCurve) {
  // For a free solution the b-weight only sees the window spectrum, so the
  // ratio between two data sets equals the ratio of their FL norms for any b.
  const auto a = oracle::random_state(6, 6, 1.0, 1);
  const auto b = oracle::random_state(6, 6, 1.0, 2);
  const auto ta = free_trajectory(a, 0.02, 64), tb = free_trajectory(b, 0.02, 64);
  for (double bexp : {0.0, 0.5, 1.0}) {
    const double ra = xsb_norm(ta, NormSpec{0.5, 3.0, bexp, 2.0});
    const double rb = xsb_norm(tb, NormSpec{0.5, 3.0, bexp, 2.0});
    EXPECT_NEAR(ra / rb, fl_norm(a, 0.5, 3.0) / fl_norm(b, 0.5, 3.0), 1e-10);
    EXPECT_GE(ra, xsb_norm(ta, NormSpec{0.5, 3.0, 0.0, 2.0}) * (1.0 - 1e-12));
  }
}

TEST(Xsb, ModulatedDataCostsMoreForPositiveB) {
  // A time-dependent modulus puts weight away from tau = n^3.
  const auto u0 = FourierState::single_mode(4, 2, 1.0);
  auto still = free_trajectory(u0, 0.01, 200);
  auto moving = still;
  for (std::size_t k = 0; k < moving.size(); ++k) moving.states[k][2] *= std::polar(1.0, 40.0 * k * 0.01);
  const NormSpec spec{0.0, 2.0, 0.5, 2.0};
  EXPECT_GT(xsb_norm(moving, spec), 2.0 * xsb_norm(still, spec));
  const NormSpec flat{0.0, 2.0, 0.0, 2.0};
  EXPECT_NEAR(xsb_norm(moving, flat), xsb_norm(still, flat), 1e-12);
}

TEST(Xsb, Validation) {
  const auto t = free_trajectory(FourierState(2), 0.1, 4);
  EXPECT_THROW(xsb_norm(t, NormSpec{}), std::invalid_argument);
  const auto t8 = free_trajectory(FourierState(2), 0.1, 8);
  EXPECT_THROW(xsb_norm(t8, NormSpec{0.0, NormSpec::infinity}), std::invalid_argument);
  XsbInfo info;
  EXPECT_EQ(xsb_norm(t8, NormSpec{}, &info), 0.0);
  EXPECT_EQ(info.samples, 8u);
  EXPECT_GE(info.padded_length, 32u);
}
