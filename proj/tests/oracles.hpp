#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the FFT, SIMD or pseudo-spectral paths of the library.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mkdv/fourier_state.hpp"

namespace oracle {

using cplx = std::complex<double>;
using mkdv::FourierState;

/// Random state with i.i.d. complex coefficients of modulus <= amp on |n| <= active.
FourierState random_state(int mode_cap, int active, double amp, std::uint64_t seed);

/// sum_n c(n) e^{i n x_j} evaluated term by term.
std::vector<cplx> synthesize(const FourierState& s, std::size_t points);

/// Exact triple convolution restricted to |n| <= M.
FourierState triple_convolution(const FourierState& a, const FourierState& b, const FourierState& c);

/// (sum n)^3 - sum n^3 in 128-bit arithmetic.
__int128 phi_by_cubes(std::int64_t n1, std::int64_t n2, std::int64_t n3);

/// Sum over n1 + n2 + n3 = n with (n1+n2)(n1+n3)(n2+n3) != 0 of i n3 u(n1) conj(u(-n2)) u(n3).
FourierState nonresonant(const FourierState& u);

/// Fourier coefficients of |u|^2 u_x by direct convolution of u, conj u and u_x.
FourierState abs2_dx(const FourierState& u);

long double mass(const FourierState& u);
long double momentum(const FourierState& u);
long double fl_norm(const FourierState& u, double s, double p);

/// J'_1(n) raw sum in long double, one term at a time.
long double j1(std::int64_t n, double s, double p, std::int64_t K);

/// 8 sum_{n=1}^N n^{-2} in long double.
long double random_momentum_second_moment(int N);

/// Plane wave c(N) = A e^{i omega t}, omega = N^3 + extra (extra is the nonlinear frequency).
FourierState plane_wave(int mode_cap, int N, cplx A, double omega_extra, double t);

}  // namespace oracle
