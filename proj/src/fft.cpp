#include "mkdv/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mkdv::fft {
namespace {

// The FFTW planner is not thread-safe; executing an existing plan on a
// different buffer is, provided the buffer has the planned alignment.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool is_smooth(std::size_t n) {
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    while (n % p == 0) n /= p;
  }
  return n == 1;
}

}  // namespace

std::size_t good_size(std::size_t n) {
  if (n <= 1) return 1;
  while (!is_smooth(n)) ++n;
  return n;
}

std::size_t padded_size(std::size_t n) {
  std::size_t best = 1;
  while (best < n) best *= 2;
  for (std::size_t m : {3u, 5u}) {
    std::size_t k = m;
    while (k < n) k *= 2;
    best = std::min(best, k);
  }
  return best;
}

Workspace::Workspace(std::size_t size) : size_(size) {
  if (size == 0) throw std::invalid_argument("transform size must be positive");
  buffer_ = reinterpret_cast<std::complex<double>*>(fftw_malloc(sizeof(fftw_complex) * size));
  if (buffer_ == nullptr) throw std::bad_alloc();
  auto* raw = reinterpret_cast<fftw_complex*>(buffer_);
  const int n = static_cast<int>(size);
  std::lock_guard lock(planner_mutex());
  forward_plan_ = fftw_plan_dft_1d(n, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_plan_ = fftw_plan_dft_1d(n, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
  for (std::size_t i = 0; i < size; ++i) buffer_[i] = {};
}

Workspace::~Workspace() {
  if (buffer_ == nullptr) return;
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
  }
  fftw_free(buffer_);
}

Workspace::Workspace(Workspace&& other) noexcept
    : size_(std::exchange(other.size_, 0)),
      buffer_(std::exchange(other.buffer_, nullptr)),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      backward_plan_(std::exchange(other.backward_plan_, nullptr)) {}

Workspace& Workspace::operator=(Workspace&& other) noexcept {
  if (this != &other) {
    Workspace tmp(std::move(other));
    std::swap(size_, tmp.size_);
    std::swap(buffer_, tmp.buffer_);
    std::swap(forward_plan_, tmp.forward_plan_);
    std::swap(backward_plan_, tmp.backward_plan_);
  }
  return *this;
}

void Workspace::forward() { fftw_execute(static_cast<fftw_plan>(forward_plan_)); }

void Workspace::backward() { fftw_execute(static_cast<fftw_plan>(backward_plan_)); }

}  // namespace mkdv::fft
