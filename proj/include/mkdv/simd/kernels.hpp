#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace mkdv::simd {

using cplx = std::complex<double>;

/// Data-parallel inner loops of the spectral solver. Every entry has a scalar
/// reference implementation; vector variants must agree with it to rounding.
/// Arrays are interleaved (re, im) and need not be aligned. Output may alias
/// an input of the same length.
struct KernelTable {
  std::string_view name;
  /// out[i] = a[i] * b[i] * c[i]
  void (*mul3)(const cplx* a, const cplx* b, const cplx* c, cplx* out, std::size_t n);
  /// out[i] = |u[i]|^2 * v[i]
  void (*abs2_mul)(const cplx* u, const cplx* v, cplx* out, std::size_t n);
  /// out[i] = a[i] * b[i]
  void (*mul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  /// x[i] *= alpha
  void (*scale)(double alpha, cplx* x, std::size_t n);
  /// sum |x[i]|^2
  double (*sum_abs2)(const cplx* x, std::size_t n);
};

const KernelTable& scalar_kernels();

/// nullptr when the build or the running CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

/// Table chosen at first use: the best supported variant, unless the
/// environment variable MKDV_LAB_SIMD=scalar forces the reference path.
const KernelTable& active_kernels();

}  // namespace mkdv::simd
