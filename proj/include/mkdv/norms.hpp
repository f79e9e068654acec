#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mkdv/fourier_state.hpp"
#include "mkdv/trajectory.hpp"

namespace mkdv {

/// (s, p) for FL^{s,p}; b, q additionally for X^{s,b}_{p,q}.
struct NormSpec {
  double s = 0.0;
  double p = 2.0;  ///< may be +infinity for fl_norm only
  double b = 0.0;
  double q = 2.0;

  static constexpr double infinity = std::numeric_limits<double>::infinity();

  /// Throws std::invalid_argument unless p >= 1, q >= 1 and all fields are non-NaN.
  void validate() const;
  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

/// || <n>^s c(n) ||_{l^p}; the supremum when p is infinite.
double fl_norm(const FourierState& state, const NormSpec& spec);
double fl_norm(const FourierState& state, double s, double p);

/// mu = sum |c(n)|^2 = (1/2pi) ||u||_{L^2}^2.
double mass(const FourierState& state);

/// P = sum n |c(n)|^2, accumulated over +-n pairs so real-valued states give exactly 0.
double momentum(const FourierState& state);

/// P(P_{<=N} state).
double truncated_momentum(const FourierState& state, int cutoff);

enum class MomentumVerdict { converged, diverging, undetermined };

std::string to_string(MomentumVerdict v);

struct MomentumSeries {
  std::vector<std::pair<int, double>> truncations;  ///< (N, P_N), N increasing
  MomentumVerdict verdict = MomentumVerdict::undetermined;
  double limit = 0.0;  ///< meaningful when converged
  double tol = 1e-6;
};

/// Evaluates P_N along `schedule` (strictly increasing, >= 4 entries) and classifies:
///  - converged: the last three successive differences are below tol (1 + |P_last|);
///  - diverging: |P_last| >= 2 |P_first| and the last increment is at least as
///    large as the first (increments do not decay);
///  - undetermined otherwise.
MomentumSeries momentum_limit_diagnostic(const FourierState& state, const std::vector<int>& schedule,
                                         double tol = 1e-6);

/// Metadata describing how xsb_norm discretized the space-time transform.
struct XsbInfo {
  std::string window = "raised_cosine";
  std::size_t samples = 0;
  std::size_t padded_length = 0;
  double tau_spacing = 0.0;
};

/// Discrete proxy of || <n>^s <tau - n^3>^b F_{t,x}(w u)(tau, n) ||_{l^p_n L^q_tau}
/// with w(t) = sin^2(pi (t - t0) / span) over the trajectory span. The transform
/// is taken in the interaction representation, where tau - n^3 becomes the
/// time frequency, so the cubic phases never alias. Needs >= 8 samples.
double xsb_norm(const Trajectory& traj, const NormSpec& spec, XsbInfo* info = nullptr);

/// Raised-cosine window value at fraction r in [0, 1].
double raised_cosine(double r);

}  // namespace mkdv
