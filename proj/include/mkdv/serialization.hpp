#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mkdv/fourier_state.hpp"
#include "mkdv/norms.hpp"
#include "mkdv/trajectory.hpp"

namespace mkdv::io {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

/// CSV with header "n,re,im"; the time stamp is kept in a leading "# time=" comment.
void write_state_csv(std::ostream& out, const FourierState& state);
FourierState read_state_csv(std::istream& in);

/// {"mode_cap": M, "time": t, "coeffs": [[n, re, im], ...]}
std::string state_to_json(const FourierState& state);
FourierState state_from_json(const std::string& text);

void save_state(const std::filesystem::path& path, const FourierState& state);
/// Chooses the format from the extension (.json or anything else as CSV).
FourierState load_state(const std::filesystem::path& path);

/// Writes states/NNNNNN.csv and manifest.json into `dir` (created if needed).
void save_trajectory(const std::filesystem::path& dir, const Trajectory& traj);
Trajectory load_trajectory(const std::filesystem::path& dir);

/// CSV "N,P_N" plus a JSON sidecar with the verdict.
void write_momentum_series(const std::filesystem::path& csv_path, const MomentumSeries& series);

struct J1Sample {
  std::int64_t n = 0;
  std::int64_t radius = 0;
  double value = 0.0;
};

/// CSV "n,K,value".
void write_j1_sweep(std::ostream& out, const std::vector<J1Sample>& samples);

}  // namespace mkdv::io
