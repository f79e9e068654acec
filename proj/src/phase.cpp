#include "mkdv/phase.hpp"

#include <cmath>
#include <limits>

namespace mkdv {

double reduced_phase(std::int64_t q, double t) {
  constexpr double two_pi_hi = 6.283185307179586;
  constexpr double two_pi_lo = 2.4492935982947064e-16;
#if defined(__SIZEOF_FLOAT128__)
  using quad = __float128;
  const quad two_pi = static_cast<quad>(two_pi_hi) + static_cast<quad>(two_pi_lo);
  const quad x = static_cast<quad>(q) * static_cast<quad>(t);
  const quad turns = x / two_pi;
  if (turns > static_cast<quad>(9.0e18) || turns < static_cast<quad>(-9.0e18)) {
    return std::remainder(static_cast<double>(x), two_pi_hi);
  }
  auto k = static_cast<long long>(turns);
  quad r = x - static_cast<quad>(k) * two_pi;
  const quad half = two_pi / 2;
  while (r > half) r -= two_pi;
  while (r < -half) r += two_pi;
  return static_cast<double>(r);
#else
  const long double x = static_cast<long double>(q) * static_cast<long double>(t);
  const long double two_pi = static_cast<long double>(two_pi_hi) + two_pi_lo;
  return static_cast<double>(std::remainder(x, two_pi));
#endif
}

std::complex<double> unit_phase(std::int64_t q, double t) {
  const double theta = reduced_phase(q, t);
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace mkdv
