#include "mkdv/spectral.hpp"

#include <algorithm>
#include <string>

#include "mkdv/errors.hpp"
#include "mkdv/simd/kernels.hpp"

namespace mkdv {
namespace {

std::size_t slot(int n, std::size_t points) {
  const auto k = static_cast<std::ptrdiff_t>(points);
  return static_cast<std::size_t>(((n % k) + k) % k);
}

void require_resolution(int mode_cap, std::size_t points) {
  if (points < 2 * static_cast<std::size_t>(mode_cap) + 1) {
    throw AliasingError("grid of " + std::to_string(points) + " points cannot represent modes |n| <= " +
                        std::to_string(mode_cap) + " (need K >= 2M+1)");
  }
}

}  // namespace

GridFunction to_physical(const FourierState& state, std::size_t points) {
  const int cap = state.mode_cap();
  require_resolution(cap, points);
  fft::Workspace ws(points);
  auto buf = ws.data();
  for (int n = -cap; n <= cap; ++n) buf[slot(n, points)] = state[n];
  ws.backward();
  return GridFunction{std::vector<cplx>(buf.begin(), buf.end())};
}

FourierState to_fourier(const GridFunction& grid, int mode_cap, double time) {
  const std::size_t points = grid.points();
  require_resolution(mode_cap, points);
  fft::Workspace ws(points);
  auto buf = ws.data();
  std::copy(grid.samples.begin(), grid.samples.end(), buf.begin());
  ws.forward();
  FourierState out(mode_cap, time);
  const double inv = 1.0 / static_cast<double>(points);
  for (int n = -mode_cap; n <= mode_cap; ++n) out[n] = buf[slot(n, points)] * inv;
  return out;
}

FourierState project_low(const FourierState& state, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("projection cutoff must be non-negative");
  FourierState out(state.mode_cap(), state.time());
  const int keep = std::min(cutoff, state.mode_cap());
  for (int n = -keep; n <= keep; ++n) out[n] = state[n];
  return out;
}

FourierState project_high(const FourierState& state, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("projection cutoff must be non-negative");
  FourierState out = state;
  const int drop = std::min(cutoff, state.mode_cap());
  for (int n = -drop; n <= drop; ++n) out[n] = cplx{};
  return out;
}

FourierState derivative(const FourierState& state, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  FourierState out = state;
  if (order == 0) return out;
  const int cap = state.mode_cap();
  for (int n = -cap; n <= cap; ++n) {
    // (i n)^order = n^order * i^order, with i^order cycling through 1, i, -1, -i.
    double magnitude = 1.0;
    for (int k = 0; k < order; ++k) magnitude *= n;
    static constexpr cplx kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    out[n] = state[n] * (magnitude * kPowersOfI[order % 4]);
  }
  return out;
}

FourierState conjugate_reflect(const FourierState& state) {
  FourierState out(state.mode_cap(), state.time());
  const int cap = state.mode_cap();
  for (int n = -cap; n <= cap; ++n) out[n] = std::conj(state[-n]);
  return out;
}

std::size_t dealiased_grid_size(int mode_cap) {
  return fft::padded_size(4 * static_cast<std::size_t>(mode_cap) + 1);
}

CubicProduct::CubicProduct(int mode_cap)
    : mode_cap_(mode_cap),
      grid_size_(dealiased_grid_size(mode_cap)),
      first_(grid_size_),
      second_(grid_size_),
      third_(grid_size_) {}

void CubicProduct::load(const FourierState& state, fft::Workspace& ws, bool differentiate) {
  if (state.mode_cap() != mode_cap_) {
    throw std::invalid_argument("mode cap mismatch in cubic product: " + std::to_string(state.mode_cap()) +
                                " vs " + std::to_string(mode_cap_));
  }
  // Grid layout: modes 0..M at the front, -M..-1 at the back, zeros between.
  auto buf = ws.data();
  const auto c = state.coeffs();
  const std::size_t M = static_cast<std::size_t>(mode_cap_);
  const std::size_t tail = grid_size_ - M;
  if (differentiate) {
    for (std::size_t j = 0; j <= M; ++j) {
      const double n = static_cast<double>(j);
      buf[j] = cplx{-n * c[M + j].imag(), n * c[M + j].real()};
    }
    for (std::size_t j = 0; j < M; ++j) {
      const double n = static_cast<double>(j) - static_cast<double>(M);
      buf[tail + j] = cplx{-n * c[j].imag(), n * c[j].real()};
    }
  } else {
    std::copy(c.begin() + M, c.end(), buf.begin());
    std::copy(c.begin(), c.begin() + M, buf.begin() + tail);
  }
  std::fill(buf.begin() + M + 1, buf.begin() + tail, cplx{});
  ws.backward();
}

void CubicProduct::store(fft::Workspace& ws, FourierState& out) {
  ws.forward();
  auto buf = ws.data();
  const double inv = 1.0 / static_cast<double>(grid_size_);
  auto c = out.coeffs();
  const std::size_t M = static_cast<std::size_t>(mode_cap_);
  const std::size_t tail = grid_size_ - M;
  for (std::size_t j = 0; j <= M; ++j) c[M + j] = buf[j] * inv;
  for (std::size_t j = 0; j < M; ++j) c[j] = buf[tail + j] * inv;
}

FourierState CubicProduct::triple(const FourierState& a, const FourierState& b, const FourierState& c) {
  load(a, first_, false);
  load(b, second_, false);
  load(c, third_, false);
  const auto& k = simd::active_kernels();
  k.mul3(first_.data().data(), second_.data().data(), third_.data().data(), first_.data().data(),
         grid_size_);
  FourierState out(mode_cap_, a.time());
  store(first_, out);
  return out;
}

void CubicProduct::abs2_dx(const FourierState& u, FourierState& out) {
  load(u, first_, false);
  load(u, second_, true);
  const auto& k = simd::active_kernels();
  k.abs2_mul(first_.data().data(), second_.data().data(), first_.data().data(), grid_size_);
  if (out.mode_cap() != mode_cap_) out = FourierState(mode_cap_);
  out.set_time(u.time());
  store(first_, out);
}

FourierState dealiased_triple_product(const FourierState& a, const FourierState& b,
                                      const FourierState& c) {
  if (a.mode_cap() != b.mode_cap() || a.mode_cap() != c.mode_cap()) {
    throw std::invalid_argument("dealiased_triple_product requires equal mode caps");
  }
  CubicProduct product(a.mode_cap());
  return product.triple(a, b, c);
}

}  // namespace mkdv
