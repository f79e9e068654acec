#include "mkdv/simd/kernels.hpp"

#include "kernels_internal.hpp"

namespace mkdv::simd {
namespace scalar {

void mul3(const cplx* a, const cplx* b, const cplx* c, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] * c[i];
}

void abs2_mul(const cplx* u, const cplx* v, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(u[i]) * v[i];
}

void mul(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double alpha, cplx* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

double sum_abs2(const cplx* x, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += std::norm(x[i]);
  return total;
}

}  // namespace scalar

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar",     scalar::mul3,  scalar::abs2_mul, scalar::mul,
                                 scalar::axpy, scalar::scale, scalar::sum_abs2};
  return table;
}

}  // namespace mkdv::simd
