#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mkdv {

using cplx = std::complex<double>;

/// Japanese bracket <n> = (1 + n^2)^{1/2}.
inline double japanese_bracket(double n) { return std::sqrt(1.0 + n * n); }

/// One time slice of a periodic function on T = R / 2piZ, stored as the
/// Fourier coefficients u^(n), |n| <= M, with u(x) = sum u^(n) e^{inx} and
/// u^(n) = (1/2pi) int u e^{-inx} dx.
///
/// Coefficients are laid out symmetrically: index n + M holds mode n.
class FourierState {
 public:
  FourierState() : FourierState(0) {}
  explicit FourierState(int mode_cap, double time = 0.0);
  FourierState(int mode_cap, std::vector<cplx> coeffs, double time = 0.0);

  /// A state whose only nonzero coefficient is `amplitude` at mode `n`.
  static FourierState single_mode(int mode_cap, int n, cplx amplitude, double time = 0.0);

  int mode_cap() const { return mode_cap_; }
  std::size_t size() const { return coeffs_.size(); }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  /// Mode access; `n` must lie in [-M, M].
  cplx& operator[](int n) { return coeffs_[static_cast<std::size_t>(n + mode_cap_)]; }
  const cplx& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n + mode_cap_)]; }
  /// Bounds-checked access; throws std::out_of_range.
  cplx at(int n) const;
  /// Coefficient at `n`, or zero when |n| > M.
  cplx coeff_or_zero(int n) const {
    return (n < -mode_cap_ || n > mode_cap_) ? cplx{} : (*this)[n];
  }

  std::span<cplx> coeffs() { return coeffs_; }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// Conjugate symmetry c(-n) = conj(c(n)) within `tol`, i.e. u is real-valued.
  bool is_real_valued(double tol = 1e-14) const;
  bool is_finite() const;

  friend bool operator==(const FourierState&, const FourierState&) = default;

 private:
  int mode_cap_ = 0;
  double time_ = 0.0;
  std::vector<cplx> coeffs_;
};

/// Samples u(x_j), x_j = 2 pi j / K.
struct GridFunction {
  std::vector<cplx> samples;
  std::size_t points() const { return samples.size(); }
};

/// Largest coefficientwise |a(n) - b(n)| over the union of both mode ranges.
double max_abs_difference(const FourierState& a, const FourierState& b);

/// sum_n |a(n) - b(n)|; an upper bound for sup_x |a(x) - b(x)|.
double l1_difference(const FourierState& a, const FourierState& b);

/// Re-expresses `state` with a different mode cap (truncating or zero-padding).
FourierState with_mode_cap(const FourierState& state, int mode_cap);

}  // namespace mkdv
