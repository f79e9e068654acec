#pragma once

#include <complex>
#include <cstdint>

namespace mkdv {

/// (q * t) reduced to [-pi, pi], with q an exact integer. The product is
/// formed in extended precision so that large dispersive phases n^3 t keep
/// full double accuracy after reduction.
double reduced_phase(std::int64_t q, double t);

/// e^{i q t} computed from reduced_phase.
std::complex<double> unit_phase(std::int64_t q, double t);

}  // namespace mkdv
