#include <gtest/gtest.h>

#include "mkdv/dynamics.hpp"
#include "mkdv/gauges.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/presets.hpp"
#include "oracles.hpp"

using namespace mkdv;

namespace {

Trajectory random_trajectory(std::uint64_t seed) {
  Trajectory t;
  t.mode_cap = 10;
  t.sample_dt = 0.37;
  t.equation = {Variant::mKdV, 1};
  for (int k = 0; k < 6; ++k) {
    auto s = oracle::random_state(10, 10, 1.0, seed + k);
    s.set_time(0.37 * k);
    t.states.push_back(s);
  }
  return t;
}

double sup_fl_diff(const Trajectory& a, const Trajectory& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    FourierState d = a.states[k];
    for (int n = -d.mode_cap(); n <= d.mode_cap(); ++n) d[n] -= b.states[k][n];
    worst = std::max(worst, fl_norm(d, 0.5, 2.0));
  }
  return worst;
}

double max_rel_coeff(const Trajectory& a, const Trajectory& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    for (int n = -a.mode_cap; n <= a.mode_cap; ++n) {
      const double scale = std::max(std::abs(b.states[k][n]), 1e-300);
      worst = std::max(worst, std::abs(a.states[k][n] - b.states[k][n]) / scale);
    }
  return worst;
}

}  // namespace

TEST(Gauge1, InitialSliceUnchangedAndNormsInvariant) {
  const auto t = random_trajectory(1);
  const auto g = apply_gauge1(t, 1);
  EXPECT_EQ(g.states.front(), t.states.front());
  ASSERT_EQ(g.gauges.size(), 1u);
  EXPECT_EQ(g.gauges[0].spec.which, GaugeKind::G1);
  EXPECT_DOUBLE_EQ(g.gauges[0].spec.scalar, mass(t.states.front()));
  EXPECT_EQ(g.equation.variant, Variant::mKdV1);
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (auto [s, p] : {std::pair{0.0, 2.0}, std::pair{0.5, 3.0}, std::pair{1.0, 1.0}}) {
      EXPECT_NEAR(fl_norm(g.states[k], s, p), fl_norm(t.states[k], s, p), 1e-14 * fl_norm(t.states[k], s, p));
    }
    EXPECT_NEAR(momentum(g.states[k]), momentum(t.states[k]), 1e-13);
  }
}

TEST(Gauge1, IsATranslation) {
  // Single mode n: translation by -sign mu t multiplies by e^{-i n sign mu t}.
  Trajectory t;
  t.mode_cap = 4;
  t.sample_dt = 0.5;
  for (int k = 0; k < 3; ++k) t.states.push_back(FourierState::single_mode(4, 3, 2.0, 0.5 * k));
  const auto g = apply_gauge1(t, -1);
  const double mu = 4.0;
  EXPECT_NEAR(std::abs(g.states[2][3] - 2.0 * std::polar(1.0, 3.0 * mu * 1.0)), 0.0, 1e-13);
}

TEST(Gauge2, ZeroScalarIsIdentityAndInvariant) {
  const auto t = random_trajectory(2);
  const auto g = apply_gauge2(t, 1, 0.0);
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_EQ(g.states[k], t.states[k]);
  const auto h = apply_gauge2(t, -1, 3.7);
  for (std::size_t k = 0; k < t.size(); ++k) {
    EXPECT_NEAR(mass(h.states[k]), mass(t.states[k]), 1e-13);
    EXPECT_NEAR(fl_norm(h.states[k], 0.5, 4.0), fl_norm(t.states[k], 0.5, 4.0), 1e-13);
  }
}

TEST(InvertGauge, ApplyThenInvertIsIdentity) {
  const auto t = random_trajectory(3);
  const GaugeSpec g2{GaugeKind::G2, 1, 2.75};
  const auto back2 = invert_gauge(apply_gauge(t, g2), g2);
  EXPECT_LE(max_rel_coeff(back2, t), 1e-15 * 4);
  EXPECT_TRUE(back2.gauges.empty());
  const auto g1 = apply_gauge1(t, -1);
  const auto back1 = invert_gauge(g1, g1.gauges.back().spec);
  EXPECT_LE(max_rel_coeff(back1, t), 1e-15 * 4);
  EXPECT_EQ(back1.equation, t.equation);
}

TEST(InvertGauge, MismatchIsRejected) {
  const auto t = apply_gauge2(random_trajectory(4), 1, 1.0);
  EXPECT_THROW(invert_gauge(t, GaugeSpec{GaugeKind::G2, 1, 2.0}), std::invalid_argument);
  EXPECT_THROW(invert_gauge(t, GaugeSpec{GaugeKind::G1, 1, 1.0}), std::invalid_argument);
}

TEST(InvertGauge, UngaugedTrajectoryGetsTheOppositePhase) {
  const auto t = random_trajectory(5);
  const GaugeSpec spec{GaugeKind::G2, 1, 1.5};
  const auto inv = invert_gauge(t, spec);
  ASSERT_EQ(inv.gauges.size(), 1u);
  EXPECT_TRUE(inv.gauges[0].inverse);
  const double tk = t.states[3].time();
  EXPECT_NEAR(std::abs(inv.states[3][2] - std::polar(1.0, 1.5 * tk) * t.states[3][2]), 0.0, 1e-14);
  // Inverting the inverse restores the original.
  EXPECT_LE(max_rel_coeff(invert_gauge(inv, spec), t), 4e-15);
}

TEST(GaugeFlows, SolutionsOfTheThreeEquationsAreGaugeRelated) {
  const auto ic = make_initial_state(parse_preset("random_smooth:0.3,11"), 32);
  for (int sg : {1, -1}) {
    SolveOptions o;
    o.sample_stride = 25;
    const auto u0 = solve(ic, {Variant::mKdV, sg}, 0.5, 1e-3, o);
    const auto u1 = solve(ic, {Variant::mKdV1, sg}, 0.5, 1e-3, o);
    const auto u2 = solve(ic, {Variant::mKdV2, sg}, 0.5, 1e-3, o);
    EXPECT_LE(sup_fl_diff(apply_gauge1(u0, sg), u1), 1e-6);
    EXPECT_LE(sup_fl_diff(apply_gauge2(u1, sg, momentum(ic)), u2), 1e-6);
    EXPECT_LE(sup_fl_diff(apply_gauge2(apply_gauge1(u0, sg), sg, momentum(ic)), u2), 1e-6);
    // Without the gauge the flows really differ.
    EXPECT_GT(sup_fl_diff(u0, u1), 1e-3);
  }
}
