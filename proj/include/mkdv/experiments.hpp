#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mkdv/errors.hpp"
#include "mkdv/presets.hpp"
#include "mkdv/report.hpp"
#include "mkdv/serialization.hpp"
#include "mkdv/trajectory.hpp"

namespace mkdv {

/// A solver abort inside an experiment; the report holds the partial series.
class ExperimentAbort : public NumericalError {
 public:
  ExperimentAbort(const std::string& what, ExperimentReport partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const ExperimentReport& partial() const { return partial_; }

 private:
  ExperimentReport partial_;
};

struct ConservationParams {
  EquationSpec equation{Variant::mKdV2, 1};
  Preset ic = parse_preset("random_smooth:0.3,1");
  double T = 1.0;
  double dt = 2.5e-4;
  int modes = 32;
  std::size_t sample_stride = 40;
  double mass_tol = 1e-8;      ///< relative
  double momentum_tol = 1e-8;  ///< absolute
};
ExperimentReport exp_conservation(const ConservationParams& params);

struct GaugeEquivalenceParams {
  Preset ic = parse_preset("random_smooth:0.3,1");
  int sign = 1;
  double T = 0.5;
  double dt = 1e-3;
  int modes = 32;
  std::size_t sample_stride = 10;
  double tol = 1e-6;
};
ExperimentReport exp_gauge_equivalence(const GaugeEquivalenceParams& params);

struct NonexistenceParams {
  double s = 0.5;
  double p = 3.0;
  double alpha = 0.9;
  bool symmetric_data = false;  ///< run the main family on real-valued data (control data)
  std::vector<int> schedule{32, 64, 128, 256};
  double T = 1.0;
  double dt = 2.5e-5;
  int modes = 512;
  int sign = 1;
  std::size_t sample_stride = 200;
  double cauchy_shrink = 4.0;     ///< first v-difference / last v-difference must reach this
  double separation = 0.1;        ///< u-differences >= separation * ||v||
  double pairing_ratio = 0.5;     ///< |pairing(N_last)| <= ratio * |pairing(N_first)|
  double control_pairing_ratio = 0.5;  ///< control: |pairing(N_last)| >= ratio * |pairing(N_first)|
};
ExperimentReport exp_nonexistence(const NonexistenceParams& params);

struct IllposednessParams {
  double s = 0.1;
  double p = 2.0;
  std::vector<int> n_list{2, 4, 8, 16};
  /// "minimal": smallest N with t_n <= 1/n; "fixed:K": N = K for every n.
  std::string n_rule = "minimal";
  int sign = 1;
  /// Integrator step: the largest dt dividing t_n with (nonlinear frequency) * dt <= phase_step.
  double phase_step = 0.02;
  double solution_floor = 1.9;  ///< distance at t_n must exceed this
  double solver_tol = 1e-6;
  bool run_solver = true;
};
/// Smallest N with pi N^{2s-1} / ((1+1/n)^2 - 1) <= 1/n.
std::int64_t minimal_frequency(int n, double s);
/// t_n = pi N^{2s-1} / ((1+1/n)^2 - 1).
double separation_time(int n, std::int64_t N, double s);
ExperimentReport exp_illposedness(const IllposednessParams& params);

struct RandomMomentumParams {
  std::size_t samples = 10000;
  int N = 1000;
  std::uint64_t seed = 1;
  bool real_only = false;
  double sigmas = 4.0;
};
/// 8 sum_{n<=N} n^{-2}.
double random_momentum_second_moment(int N);
ExperimentReport exp_random_momentum(const RandomMomentumParams& params);

struct EnergyDriftParams {
  Preset ic = parse_preset("gaussian_bump:0.5,0.5");
  std::vector<int> schedule{8, 16, 32, 64};
  double T = 0.5;
  double dt = 1e-4;
  int modes = 128;
  int sign = 1;
  std::size_t sample_stride = 10;
  double slope_max = -0.1;
  double noise_floor = 1e-13;
};
ExperimentReport exp_energy_drift(const EnergyDriftParams& params);

struct AprioriParams {
  double s = 0.6;
  double p = 3.0;
  Variant variant = Variant::mKdV1;
  Preset ic = parse_preset("random_smooth:0.3,1");
  std::vector<double> amplitudes{0.25, 0.5, 1.0, 2.0};
  double T = 0.5;
  double dt = 1e-4;
  int modes = 32;
  int sign = 1;
  std::size_t sample_stride = 10;
  double doubling_growth = 2.0;  ///< ratio(2a) / ratio(a) must stay below this
};
ExperimentReport exp_apriori_probe(const AprioriParams& params);

struct MultiplierParams {
  /// Zipped with p_list: the probe runs (s_list[i], p_list[i]).
  std::vector<double> s_list{0.5, 0.75};
  std::vector<double> p_list{2.0, 8.0};
  std::vector<std::int64_t> n_list{0, 32, -32, 256, -256};
  std::vector<std::int64_t> K_list{64, 128, 256, 512};
  double stabilization = 0.05;
};
/// Raw j1 values for every (s, p, n, K) of the probe, in loop order.
std::vector<std::pair<std::pair<double, double>, io::J1Sample>> multiplier_sweep(const MultiplierParams& params);
ExperimentReport exp_multiplier_probe(const MultiplierParams& params);

}  // namespace mkdv
