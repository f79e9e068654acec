#pragma once

#include "mkdv/simd/kernels.hpp"

namespace mkdv::simd {

// Defined in kernels_avx2.cpp; nullptr when that unit was built without AVX2.
const KernelTable* avx2_table_if_compiled();

}  // namespace mkdv::simd
