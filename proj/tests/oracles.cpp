#include "oracles.hpp"

#include <cmath>

namespace oracle {

FourierState random_state(int mode_cap, int active, double amp, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  FourierState s(mode_cap);
  for (int n = -active; n <= active; ++n) {
    const cplx z{unit(rng), unit(rng)};
    s[n] = amp * z / std::sqrt(2.0);
  }
  return s;
}

std::vector<cplx> synthesize(const FourierState& s, std::size_t points) {
  std::vector<cplx> out(points);
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  for (std::size_t j = 0; j < points; ++j) {
    std::complex<long double> acc{};
    for (int n = -s.mode_cap(); n <= s.mode_cap(); ++n) {
      // Reduce n j mod points exactly before forming the angle.
      const long long r = ((static_cast<long long>(n) * static_cast<long long>(j)) % static_cast<long long>(points));
      const long double x = two_pi * r / points;
      acc += std::complex<long double>(s[n].real(), s[n].imag()) * std::complex<long double>(std::cos(x), std::sin(x));
    }
    out[j] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

FourierState triple_convolution(const FourierState& a, const FourierState& b, const FourierState& c) {
  const int M = a.mode_cap();
  FourierState out(M);
  for (int n = -M; n <= M; ++n) {
    std::complex<long double> acc{};
    for (int n1 = -M; n1 <= M; ++n1) {
      for (int n2 = -M; n2 <= M; ++n2) {
        const int n3 = n - n1 - n2;
        if (n3 < -M || n3 > M) continue;
        const cplx t = a[n1] * b[n2] * c[n3];
        acc += std::complex<long double>(t.real(), t.imag());
      }
    }
    out[n] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

__int128 phi_by_cubes(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  const __int128 n = static_cast<__int128>(n1) + n2 + n3;
  return n * n * n - static_cast<__int128>(n1) * n1 * n1 - static_cast<__int128>(n2) * n2 * n2 -
         static_cast<__int128>(n3) * n3 * n3;
}

FourierState nonresonant(const FourierState& u) {
  const int M = u.mode_cap();
  FourierState out(M);
  for (int n = -M; n <= M; ++n) {
    std::complex<long double> acc{};
    for (int n1 = -M; n1 <= M; ++n1) {
      for (int n3 = -M; n3 <= M; ++n3) {
        const int n2 = n - n1 - n3;
        if (n2 < -M || n2 > M) continue;
        if ((n1 + n2) == 0 || (n1 + n3) == 0 || (n2 + n3) == 0) continue;
        const cplx t = cplx{0.0, static_cast<double>(n3)} * u[n1] * std::conj(u[-n2]) * u[n3];
        acc += std::complex<long double>(t.real(), t.imag());
      }
    }
    out[n] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

FourierState abs2_dx(const FourierState& u) {
  const int M = u.mode_cap();
  FourierState conj_u(M), ux(M);
  for (int n = -M; n <= M; ++n) {
    conj_u[n] = std::conj(u[-n]);
    ux[n] = cplx{0.0, static_cast<double>(n)} * u[n];
  }
  return triple_convolution(u, conj_u, ux);
}

long double mass(const FourierState& u) {
  long double acc = 0;
  for (int n = -u.mode_cap(); n <= u.mode_cap(); ++n) acc += std::norm(std::complex<long double>(u[n].real(), u[n].imag()));
  return acc;
}

long double momentum(const FourierState& u) {
  long double acc = 0;
  for (int n = -u.mode_cap(); n <= u.mode_cap(); ++n) {
    acc += static_cast<long double>(n) * std::norm(std::complex<long double>(u[n].real(), u[n].imag()));
  }
  return acc;
}

long double fl_norm(const FourierState& u, double s, double p) {
  long double acc = 0;
  for (int n = -u.mode_cap(); n <= u.mode_cap(); ++n) {
    const long double w = std::pow(1.0L + static_cast<long double>(n) * n, s / 2.0L);
    const long double a = w * std::abs(std::complex<long double>(u[n].real(), u[n].imag()));
    if (std::isinf(p)) {
      acc = std::max(acc, a);
    } else {
      acc += std::pow(a, static_cast<long double>(p));
    }
  }
  return std::isinf(p) ? acc : std::pow(acc, 1.0L / p);
}

long double j1(std::int64_t n, double s, double p, std::int64_t K) {
  const long double dual = p / (p - 1.0L);
  auto br = [s](std::int64_t m) { return std::pow(1.0L + static_cast<long double>(m) * m, s / 2.0L); };
  long double acc = 0;
  for (std::int64_t n1 = -K; n1 <= K; ++n1) {
    for (std::int64_t n2 = -K; n2 <= K; ++n2) {
      const std::int64_t n3 = n - n1 - n2;
      if ((n1 + n2) == 0 || (n1 + n3) == 0 || (n2 + n3) == 0) continue;
      const long double phi = std::abs(static_cast<long double>(phi_by_cubes(n1, n2, n3)));
      const long double term = br(n) * std::abs(static_cast<long double>(n3)) / (std::sqrt(phi) * br(n1) * br(n2) * br(n3));
      acc += std::pow(term, dual);
    }
  }
  return acc;
}

long double random_momentum_second_moment(int N) {
  long double acc = 0;
  for (int n = 1; n <= N; ++n) acc += 1.0L / (static_cast<long double>(n) * n);
  return 8.0L * acc;
}

FourierState plane_wave(int mode_cap, int N, cplx A, double omega_extra, double t) {
  FourierState s(mode_cap, t);
  // n^3 t is reduced with long double before adding the nonlinear phase.
  const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
  const long double lin = std::fmod(static_cast<long double>(N) * N * N * t, two_pi);
  const long double theta = lin + static_cast<long double>(omega_extra) * t;
  s[N] = A * cplx{static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
  return s;
}

}  // namespace oracle
