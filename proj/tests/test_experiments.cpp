#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "mkdv/experiments.hpp"
#include "mkdv/report.hpp"
#include "oracles.hpp"

using namespace mkdv;

TEST(Conservation, SmallRunPasses) {
  ConservationParams p;
  p.T = 0.2;
  const auto r = exp_conservation(p);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.verdicts.count("mass_drift"), 1u);
  EXPECT_EQ(r.parameters.at("threshold.mass_drift"), "1e-08");
  EXPECT_FALSE(r.series.at("mass").points.empty());
}

TEST(Conservation, ReportIsByteStable) {
  ConservationParams p;
  p.T = 0.05;
  EXPECT_EQ(report_to_json(exp_conservation(p)), report_to_json(exp_conservation(p)));
}

TEST(GaugeEquivalence, SmallRunPasses) {
  GaugeEquivalenceParams p;
  p.T = 0.1;
  p.sign = -1;
  EXPECT_TRUE(exp_gauge_equivalence(p).all_pass());
}

TEST(Illposedness, FrequencyRuleAndTime) {
  for (double s : {0.1, 0.25}) {
    for (int n : {2, 4, 8}) {
      const auto N = minimal_frequency(n, s);
      EXPECT_LE(separation_time(n, N, s), 1.0 / n);
      if (N > 1) EXPECT_GT(separation_time(n, N - 1, s), 1.0 / n);
      const double d = (1.0 + 1.0 / n) * (1.0 + 1.0 / n) - 1.0;
      EXPECT_NEAR(separation_time(n, N, s), std::numbers::pi * std::pow(double(N), 2 * s - 1) / d, 1e-15);
    }
  }
}

TEST(Illposedness, QuarterRegularityAtSmallN) {
  IllposednessParams p;
  p.s = 0.25;
  p.n_list = {2, 4};
  const auto r = exp_illposedness(p);
  EXPECT_TRUE(r.verdicts.at("solver_agrees").pass) << r.verdicts.at("solver_agrees").value;
  EXPECT_TRUE(r.verdicts.at("solution_distance_floor").pass);
  EXPECT_TRUE(r.verdicts.at("initial_distance_decays").pass);
  // Analytic values at n = 4: <N>^s N^{-s} |1/n| and <N>^s N^{-s} |2 + 1/n| (opposite phase).
  const auto N = double(minimal_frequency(4, 0.25));
  const double bracket = std::pow(1.0 + 1.0 / (N * N), 0.125);
  const auto& init = r.series.at("initial_distance").points;
  const auto& sol = r.series.at("solution_distance").points;
  EXPECT_NEAR(init[1].second, bracket * 0.25, 1e-12);
  EXPECT_NEAR(sol[1].second, bracket * 2.25, 1e-9);
}

TEST(RandomMomentum, MatchesSeriesOracleAndRealDataVanishes) {
  EXPECT_NEAR(random_momentum_second_moment(1000), double(oracle::random_momentum_second_moment(1000)), 1e-12);
  EXPECT_NEAR(random_momentum_second_moment(1000000), 8 * std::numbers::pi * std::numbers::pi / 6, 1e-5);
  RandomMomentumParams p;
  p.samples = 2000;
  p.N = 200;
  EXPECT_TRUE(exp_random_momentum(p).all_pass());
  p.real_only = true;
  const auto r = exp_random_momentum(p);
  EXPECT_EQ(r.scalars.at("max_abs"), 0.0);
}

TEST(RandomMomentum, DeterministicAcrossRuns) {
  RandomMomentumParams p;
  p.samples = 500;
  p.N = 50;
  p.seed = 99;
  EXPECT_EQ(exp_random_momentum(p).scalars.at("second_moment"), exp_random_momentum(p).scalars.at("second_moment"));
}

TEST(Multiplier, SweepValuesMatchReference) {
  MultiplierParams p;
  p.s_list = {0.75};
  p.p_list = {2.0};
  p.n_list = {0, 5};
  p.K_list = {16, 24};
  const auto rows = multiplier_sweep(p);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& [sp, sample] : rows) {
    const double ref = static_cast<double>(oracle::j1(sample.n, sp.first, sp.second, sample.radius));
    EXPECT_NEAR(sample.value, ref, 1e-10 * std::abs(ref));
  }
}

TEST(Reports, InvalidParametersAreConfigErrors) {
  ConservationParams c;
  c.dt = -1.0;
  EXPECT_THROW(exp_conservation(c), ConfigError);
  MultiplierParams m;
  m.p_list = {2.0};
  EXPECT_THROW(exp_multiplier_probe(m), ConfigError);
  IllposednessParams i;
  i.n_rule = "bogus";
  EXPECT_THROW(exp_illposedness(i), ConfigError);
}

TEST(Reports, WriteReportLayout) {
  ExperimentReport r;
  r.name = "demo";
  r.add_series("a", "x", "y").points = {{1, 2}, {3, 4}};
  r.add_verdict("v", true, 1.0, 2.0, "<=");
  r.scalars["nan_value"] = std::nan("");
  const auto dir = std::filesystem::temp_directory_path() / "mkdv_lab_test_report";
  std::filesystem::remove_all(dir);
  write_report(dir, r);
  std::ifstream csv(dir / "series" / "a.csv");
  std::stringstream body;
  body << csv.rdbuf();
  EXPECT_EQ(body.str(), "x,y\n1,2\n3,4\n");
  const auto json = report_to_json(r);
  EXPECT_NE(json.find("\"nan\""), std::string::npos);
  EXPECT_EQ(json.find("timestamp"), std::string::npos);
  EXPECT_NE(json.find("\"threshold.v\""), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Nonexistence, SmallScaleStructureAndControl) {
  NonexistenceParams p;
  p.schedule = {4, 8, 16, 32};
  p.modes = 64;
  p.T = 0.2;
  p.dt = 2e-4;
  p.sample_stride = 50;
  const auto r = exp_nonexistence(p);
  for (const char* k : {"oracle_membership", "oracle_momentum_divergence", "control_momentum_zero",
                        "control_u_equals_v", "momentum_unstabilized"}) {
    EXPECT_TRUE(r.verdicts.at(k).pass) << k;
  }
  EXPECT_EQ(r.series.at("momentum_truncations").points.size(), 4u);
  EXPECT_EQ(r.scalars.at("momentum_extended_diverging"), 1.0);
  // P_N of one-sided n^{-alpha} data is sum_{n<=N} n^{1 - 2 alpha}.
  long double expect = 0;
  for (int n = 1; n <= 32; ++n) expect += std::pow((long double)n, 1 - 2 * 0.9L);
  EXPECT_NEAR(r.series.at("momentum_truncations").points.back().second, (double)expect, 1e-12);
  p.schedule = {4, 8, 16};
  EXPECT_THROW(exp_nonexistence(p), ConfigError);
}

TEST(EnergyDrift, SmoothDataDecays) {
  EnergyDriftParams p;
  p.T = 0.1;
  p.modes = 64;
  p.schedule = {4, 8, 16, 32};
  const auto r = exp_energy_drift(p);
  EXPECT_TRUE(r.verdicts.at("drift_slope").pass);
  EXPECT_EQ(r.series.at("drift").points.size(), 4u);
}

TEST(Apriori, RatiosFiniteAndPreconditionsChecked) {
  AprioriParams p;
  p.T = 0.05;
  p.amplitudes = {0.25, 0.5};
  const auto r = exp_apriori_probe(p);
  EXPECT_TRUE(r.verdicts.at("all_members_finite").pass);
  EXPECT_EQ(r.series.at("ratio").points.size(), 2u);
  p.s = 0.9;
  EXPECT_THROW(exp_apriori_probe(p), ConfigError);
}
