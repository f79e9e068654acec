#include "mkdv/fourier_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mkdv {

FourierState::FourierState(int mode_cap, double time) : mode_cap_(mode_cap), time_(time) {
  if (mode_cap < 0) throw std::invalid_argument("mode cap must be non-negative");
  coeffs_.assign(2 * static_cast<std::size_t>(mode_cap) + 1, cplx{});
}

FourierState::FourierState(int mode_cap, std::vector<cplx> coeffs, double time)
    : mode_cap_(mode_cap), time_(time), coeffs_(std::move(coeffs)) {
  if (mode_cap < 0) throw std::invalid_argument("mode cap must be non-negative");
  if (coeffs_.size() != 2 * static_cast<std::size_t>(mode_cap) + 1) {
    throw std::invalid_argument("coefficient count " + std::to_string(coeffs_.size()) +
                                " does not equal 2M+1 for M = " + std::to_string(mode_cap));
  }
}

FourierState FourierState::single_mode(int mode_cap, int n, cplx amplitude, double time) {
  FourierState s(mode_cap, time);
  if (n < -mode_cap || n > mode_cap) {
    throw std::out_of_range("mode " + std::to_string(n) + " outside [-M, M]");
  }
  s[n] = amplitude;
  return s;
}

cplx FourierState::at(int n) const {
  if (n < -mode_cap_ || n > mode_cap_) {
    throw std::out_of_range("mode " + std::to_string(n) + " outside [-M, M]");
  }
  return (*this)[n];
}

bool FourierState::is_real_valued(double tol) const {
  for (int n = 0; n <= mode_cap_; ++n) {
    if (std::abs((*this)[-n] - std::conj((*this)[n])) > tol) return false;
  }
  return true;
}

bool FourierState::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const cplx& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

double max_abs_difference(const FourierState& a, const FourierState& b) {
  const int cap = std::max(a.mode_cap(), b.mode_cap());
  double worst = 0.0;
  for (int n = -cap; n <= cap; ++n) {
    worst = std::max(worst, std::abs(a.coeff_or_zero(n) - b.coeff_or_zero(n)));
  }
  return worst;
}

double l1_difference(const FourierState& a, const FourierState& b) {
  const int cap = std::max(a.mode_cap(), b.mode_cap());
  double total = 0.0;
  for (int n = -cap; n <= cap; ++n) total += std::abs(a.coeff_or_zero(n) - b.coeff_or_zero(n));
  return total;
}

FourierState with_mode_cap(const FourierState& state, int mode_cap) {
  FourierState out(mode_cap, state.time());
  const int shared = std::min(mode_cap, state.mode_cap());
  for (int n = -shared; n <= shared; ++n) out[n] = state[n];
  return out;
}

}  // namespace mkdv
