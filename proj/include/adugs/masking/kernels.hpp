#pragma once

#include <cstdint>

namespace adugs::masking::kernels {

/// Row-combine primitive: acc[i] op= (src[i+lo] op ... op src[i+hi]) for
/// i in [0, n). The caller guarantees src[i+d] is readable for every d in
/// [lo, hi] (padded row buffers).
using ShiftCombineFn = void (*)(std::uint8_t* acc, const std::uint8_t* src,
                                int n, int lo, int hi);

struct Kernels {
  ShiftCombineFn and_range;
  ShiftCombineFn or_range;
  const char* name;
};

/// Scalar reference implementation, always available.
const Kernels& scalar_kernels();

/// Best implementation for this machine, selected once at startup
/// (AVX2 on x86 when the CPU supports it, NEON on aarch64, else scalar).
const Kernels& active_kernels();

#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();  // only callable when the CPU has AVX2
#endif
#if defined(__aarch64__)
const Kernels& neon_kernels();
#endif

}  // namespace adugs::masking::kernels
