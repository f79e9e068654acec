#pragma once

#include <cstddef>
#include <memory>

#include "mkdv/fft.hpp"
#include "mkdv/fourier_state.hpp"

namespace mkdv {

/// samples(x_j) = sum_{|n|<=M} c(n) e^{i n x_j}. Throws AliasingError when K < 2M+1.
GridFunction to_physical(const FourierState& state, std::size_t points);

/// Discrete left inverse of to_physical for band-limited samples.
/// Throws AliasingError when K < 2M+1.
FourierState to_fourier(const GridFunction& grid, int mode_cap, double time = 0.0);

/// Dirichlet projection P_{<=N}: keeps |n| <= N.
FourierState project_low(const FourierState& state, int cutoff);

/// P_{>N} = Id - P_{<=N}.
FourierState project_high(const FourierState& state, int cutoff);

/// c(n) -> (i n)^order c(n).
FourierState derivative(const FourierState& state, int order);

/// c(n) -> conj(c(-n)): the coefficients of the complex conjugate function.
FourierState conjugate_reflect(const FourierState& state);

/// Physical grid size used for alias-free cubic products at mode cap M
/// (the smallest FFT-friendly size >= 4M+1).
std::size_t dealiased_grid_size(int mode_cap);

/// Alias-free evaluation of cubic pointwise products for a fixed mode cap.
///
/// Holds the padded transform workspaces; reuse one instance across calls
/// (e.g. per time stepper). Not thread-safe.
class CubicProduct {
 public:
  explicit CubicProduct(int mode_cap);

  int mode_cap() const { return mode_cap_; }
  std::size_t grid_size() const { return grid_size_; }

  /// Coefficients |n| <= M of a * b * c; exact triple convolution on those modes.
  FourierState triple(const FourierState& a, const FourierState& b, const FourierState& c);

  /// Coefficients |n| <= M of |u|^2 d_x u, written into `out` (same mode cap).
  void abs2_dx(const FourierState& u, FourierState& out);

 private:
  void load(const FourierState& state, fft::Workspace& ws, bool differentiate);
  void store(fft::Workspace& ws, FourierState& out);

  int mode_cap_;
  std::size_t grid_size_;
  fft::Workspace first_;
  fft::Workspace second_;
  fft::Workspace third_;
};

/// Convenience wrapper around CubicProduct::triple. All mode caps must agree.
FourierState dealiased_triple_product(const FourierState& a, const FourierState& b,
                                      const FourierState& c);

}  // namespace mkdv
