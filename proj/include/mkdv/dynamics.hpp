#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "mkdv/errors.hpp"
#include "mkdv/fourier_state.hpp"
#include "mkdv/spectral.hpp"
#include "mkdv/trajectory.hpp"

namespace mkdv {

/// Phi(n1, n2, n3) = 3 (n1+n2)(n1+n3)(n2+n3) = (n1+n2+n3)^3 - n1^3 - n2^3 - n3^3.
///
/// Sign follows n^3 - sum n_j^3; the trilinear-estimate literature sometimes
/// writes the negative of this, and only |Phi| enters any bound. Evaluated in
/// 128-bit arithmetic; throws std::overflow_error when the value does not fit
/// in int64 (possible only near |n_j| = 2^20).
std::int64_t phi_resonance(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// n = n1 + n2 + n3 and (n1+n2)(n1+n3)(n2+n3) != 0.
bool lambda_membership(std::int64_t n, std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// Right-hand side of the chosen equation (sign included), pseudo-spectrally.
FourierState nonlinearity(const FourierState& state, const EquationSpec& eq);

/// Fourier-side split of the mKdV1 nonlinearity without the sign:
///   (|u|^2 - mu) u_x = NR(u, conj u, u) - R(u, u, u) + i P(u) u.
struct NonlinearityParts {
  FourierState nonresonant;    ///< sum over Lambda(n) of i n3 u(n1) conj(u(-n2)) u(n3)
  FourierState resonant;       ///< i n |u(n)|^2 u(n)
  FourierState momentum_part;  ///< i P(u) u(n)
  FourierState mean_part;      ///< mu * (i n) u(n)
};

/// Largest mode cap accepted by decompose_nonlinearity.
inline constexpr int kMaxDirectModeCap = 64;

/// Brute-force O(M^3) decomposition; throws NumericalError when M > 64.
NonlinearityParts decompose_nonlinearity(const FourierState& state);

/// Truncated multiplier sum
///   J'_1(n) = sum_{Lambda(n), |n1|,|n2| <= K} ( <n>^s |n3| / (|Phi|^{1/2} prod <n_j>^s) )^{p'}
/// without the final 1/p' root. For p = 1 (p' infinite) the largest term is returned.
double j1_multiplier_sum(std::int64_t n, double s, double p, std::int64_t radius);

/// Same sum evaluated term by term with std::pow; reference for j1_multiplier_sum.
double j1_multiplier_sum_reference(std::int64_t n, double s, double p, std::int64_t radius);

/// Airy flow S(t): c(n) -> e^{i n^3 t} c(n); time stamp advanced by t.
FourierState linear_propagator(const FourierState& state, double t);

/// Integrating-factor classical RK4 for u^_t = i n^3 u^ + F(u). The linear
/// phase is applied exactly; F is the dealiased nonlinearity of `eq`.
class Stepper {
 public:
  Stepper(int mode_cap, EquationSpec eq, double dt);

  double dt() const { return dt_; }
  const EquationSpec& equation() const { return eq_; }
  std::size_t grid_size() const { return product_.grid_size(); }

  /// Advances `state` by one step in place. Throws NumericalError on non-finite data.
  void advance(FourierState& state);

  /// Evaluates the right-hand side F(state) into `out`.
  void rhs(const FourierState& state, FourierState& out);

 private:
  void apply_phase(const std::vector<cplx>& phase, FourierState& state) const;

  int mode_cap_;
  EquationSpec eq_;
  double dt_;
  CubicProduct product_;
  std::vector<cplx> half_phase_;
  std::vector<cplx> full_phase_;
  FourierState k1_, k2_, k3_, k4_, stage_, base_;
};

/// One integrating-factor RK4 step. Throws std::invalid_argument for dt <= 0.
FourierState step(const FourierState& state, const EquationSpec& eq, double dt);

struct SolveOptions {
  /// Store every `sample_stride`-th step (1 = every step).
  std::size_t sample_stride = 1;
  /// Abort when mass changes by more than this fraction over one step.
  double max_step_mass_drift = 0.01;
};

/// dt <= 0.5 / (M max|u|^2 + 1).
double stable_dt_bound(const FourierState& state);

/// Thrown when a run is aborted; carries everything computed so far.
class SolverAbort : public NumericalError {
 public:
  SolverAbort(const std::string& what, Trajectory partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

/// Integrates from ic.time() to ic.time() + T. T / dt must be an integer within
/// 1e-9 relative; the result holds floor(T/dt)/stride + 1 states.
Trajectory solve(const FourierState& ic, const EquationSpec& eq, double T, double dt,
                 const SolveOptions& options = {});

/// Per interior sample k: || (u_{k+1} - u_{k-1}) / (2 dt) + (i n)^3 u_k - F(u_k) ||_{FL^{0,2}}.
/// Throws std::invalid_argument for fewer than 3 samples.
std::vector<double> residual_check(const Trajectory& traj);

}  // namespace mkdv
