#include "kernels_internal.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#endif

namespace mkdv::simd {

#if defined(__AVX2__) && defined(__FMA__)
namespace avx2 {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
inline __m256d load(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);          // [ar, ar, ...]
  const __m256d a_im = _mm256_permute_pd(a, 0xF);     // [ai, ai, ...]
  const __m256d b_swap = _mm256_permute_pd(b, 0x5);   // [bi, br, ...]
  // even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
  return _mm256_fmaddsub_pd(a_re, b, _mm256_mul_pd(a_im, b_swap));
}

// [|z0|^2, |z0|^2, |z1|^2, |z1|^2]
inline __m256d abs2_dup(__m256d z) {
  const __m256d sq = _mm256_mul_pd(z, z);
  return _mm256_add_pd(sq, _mm256_permute_pd(sq, 0x5));
}

// Scalar tails use plain arithmetic on doubles: instantiating std::complex
// inline templates here would let the linker pick AVX-encoded copies for the
// whole program.
struct Pair {
  double re, im;
};
inline Pair get(const cplx* p) {
  const double* d = reinterpret_cast<const double*>(p);
  return {d[0], d[1]};
}
inline void put(cplx* p, Pair v) {
  double* d = reinterpret_cast<double*>(p);
  d[0] = v.re;
  d[1] = v.im;
}
inline Pair times(Pair a, Pair b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

}  // namespace

void mul3(const cplx* a, const cplx* b, const cplx* c, cplx* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(out + i, cmul(cmul(load(a + i), load(b + i)), load(c + i)));
  for (; i < n; ++i) put(out + i, times(times(get(a + i), get(b + i)), get(c + i)));
}

void abs2_mul(const cplx* u, const cplx* v, cplx* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(out + i, _mm256_mul_pd(abs2_dup(load(u + i)), load(v + i)));
  for (; i < n; ++i) {
    const Pair z = get(u + i);
    const Pair w = get(v + i);
    const double m = z.re * z.re + z.im * z.im;
    put(out + i, {m * w.re, m * w.im});
  }
}

void mul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(out + i, cmul(load(a + i), load(b + i)));
  for (; i < n; ++i) put(out + i, times(get(a + i), get(b + i)));
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const Pair a = get(&alpha);
  const __m256d al = _mm256_setr_pd(a.re, a.im, a.re, a.im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(y + i, _mm256_add_pd(load(y + i), cmul(al, load(x + i))));
  for (; i < n; ++i) {
    const Pair p = times(a, get(x + i));
    const Pair q = get(y + i);
    put(y + i, {q.re + p.re, q.im + p.im});
  }
}

void scale(double alpha, cplx* x, std::size_t n) {
  const __m256d al = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store(x + i, _mm256_mul_pd(al, load(x + i)));
  for (; i < n; ++i) {
    const Pair z = get(x + i);
    put(x + i, {alpha * z.re, alpha * z.im});
  }
}

double sum_abs2(const cplx* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d z0 = load(x + i);
    const __m256d z1 = load(x + i + 2);
    acc0 = _mm256_fmadd_pd(z0, z0, acc0);
    acc1 = _mm256_fmadd_pd(z1, z1, acc1);
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d z = load(x + i);
    acc0 = _mm256_fmadd_pd(z, z, acc0);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    const Pair z = get(x + i);
    total += z.re * z.re + z.im * z.im;
  }
  return total;
}

}  // namespace avx2

const KernelTable* avx2_table_if_compiled() {
  static const KernelTable table{"avx2",     avx2::mul3,  avx2::abs2_mul, avx2::mul,
                                 avx2::axpy, avx2::scale, avx2::sum_abs2};
  return &table;
}
#else
const KernelTable* avx2_table_if_compiled() { return nullptr; }
#endif

}  // namespace mkdv::simd
