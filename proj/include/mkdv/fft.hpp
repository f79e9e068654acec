#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>

namespace mkdv::fft {

/// Smallest integer >= n whose only prime factors are 2, 3, 5 and 7.
std::size_t good_size(std::size_t n);

/// Smallest integer >= n of the form 2^a, 3 * 2^a or 5 * 2^a. With
/// FFTW_ESTIMATE plans these run markedly faster than nearby 7-smooth sizes
/// (2560 vs 2058: ~15 us vs ~28 us).
std::size_t padded_size(std::size_t n);

/// An aligned scratch buffer of length K with cached forward/backward plans.
///
/// Both transforms are unnormalized and in place:
///   forward:  X_k = sum_j x_j e^{-2 pi i jk/K}
///   backward: x_j = sum_k X_k e^{+2 pi i jk/K}
/// A Workspace is not shareable between threads; plans themselves come from a
/// process-wide cache guarded by a mutex.
class Workspace {
 public:
  explicit Workspace(std::size_t size);
  ~Workspace();
  Workspace(Workspace&&) noexcept;
  Workspace& operator=(Workspace&&) noexcept;
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  std::size_t size() const { return size_; }
  std::span<std::complex<double>> data() { return {buffer_, size_}; }
  std::span<const std::complex<double>> data() const { return {buffer_, size_}; }

  void forward();
  void backward();

 private:
  std::size_t size_ = 0;
  std::complex<double>* buffer_ = nullptr;
  void* forward_plan_ = nullptr;
  void* backward_plan_ = nullptr;
};

}  // namespace mkdv::fft
