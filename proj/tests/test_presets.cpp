#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mkdv/errors.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/presets.hpp"
#include "mkdv/spectral.hpp"

using namespace mkdv;

TEST(Presets, ParseAndCanonicalText) {
  EXPECT_EQ(to_string(parse_preset("plane_wave:5,1,0.5")), "plane_wave:5,1,0.5");
  EXPECT_EQ(to_string(parse_preset("zero")), "zero");
  EXPECT_EQ(parse_preset(to_string(parse_preset("random_smooth:0.25,7,6,0.4"))),
            parse_preset("random_smooth:0.25,7,6,0.4"));
  EXPECT_THROW(parse_preset("bogus:1"), ConfigError);
  EXPECT_THROW(parse_preset("plane_wave:5,1"), ConfigError);
  EXPECT_THROW(parse_preset("plane_wave:5.5,1,0"), ConfigError);
  EXPECT_THROW(parse_preset("one_sided:x"), ConfigError);
  EXPECT_THROW(parse_preset("random_smooth:0.1,1,7"), ConfigError);
}

TEST(Presets, PlaneWave) {
  const auto u = make_initial_state(parse_preset("plane_wave:5,1,0.5"), 8);
  EXPECT_DOUBLE_EQ(u[5].real(), 1.0 / std::sqrt(5.0));
  EXPECT_DOUBLE_EQ(mass(u), 0.2);
  EXPECT_THROW(make_initial_state(parse_preset("plane_wave:9,1,0"), 8), ConfigError);
}

TEST(Presets, GaussianBumpMatchesSampledFunction) {
  const auto u = make_initial_state(parse_preset("gaussian_bump:0.4,1.5,2"), 48);
  const auto g = to_physical(u, 256);
  for (std::size_t j = 0; j < 256; j += 17) {
    const double x = 2 * std::numbers::pi * j / 256;
    double periodized = 0.0;
    for (int k = -3; k <= 3; ++k) {
      const double d = x - std::numbers::pi + 2 * std::numbers::pi * k;
      periodized += std::exp(-d * d / (2 * 0.4 * 0.4));
    }
    const cplx expect = 1.5 * periodized * std::polar(1.0, 2.0 * x);
    EXPECT_NEAR(std::abs(g.samples[j] - expect), 0.0, 1e-12);
  }
}

TEST(Presets, RandomSmoothIsDeterministicAndBounded) {
  const auto a = make_initial_state(parse_preset("random_smooth:0.3,42"), 32);
  const auto b = make_initial_state(parse_preset("random_smooth:0.3,42"), 32);
  const auto c = make_initial_state(parse_preset("random_smooth:0.3,43"), 32);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  int active = 0;
  for (int n = -32; n <= 32; ++n) {
    EXPECT_LE(std::abs(a[n]), 0.5);
    if (a[n] != cplx{}) {
      ++active;
      EXPECT_LE(std::abs(n), 4);
      EXPECT_NE(n, 0);
    }
  }
  EXPECT_EQ(active, 8);
}

TEST(Presets, OneSidedAndSymmetric) {
  const auto u = make_initial_state(parse_preset("one_sided:0.9"), 16);
  for (int n = -16; n <= 0; ++n) EXPECT_EQ(u[n], cplx{});
  EXPECT_DOUBLE_EQ(u[4].real(), std::pow(4.0, -0.9));
  const auto v = make_initial_state(parse_preset("symmetric:0.9"), 16);
  EXPECT_TRUE(v.is_real_valued());
  EXPECT_EQ(momentum(v), 0.0);
  EXPECT_EQ(make_initial_state(parse_preset("zero"), 3), FourierState(3));
}
