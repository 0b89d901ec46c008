#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "adugs/masking/kernels.hpp"

// Built with -mavx2 for this translation unit only; callers must check CPU
// support before routing here.

namespace adugs::masking::kernels {

namespace {

void and_range_avx2(std::uint8_t* acc, const std::uint8_t* src, int n,
                    int lo, int hi) {
  int i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    for (int d = lo; d <= hi; ++d) {
      const __m256i s =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + d));
      v = _mm256_and_si256(v, s);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), v);
  }
  for (; i < n; ++i) {
    std::uint8_t v = acc[i];
    for (int d = lo; d <= hi && v; ++d) v &= src[i + d];
    acc[i] = v;
  }
}

void or_range_avx2(std::uint8_t* acc, const std::uint8_t* src, int n,
                   int lo, int hi) {
  int i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    for (int d = lo; d <= hi; ++d) {
      const __m256i s =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + d));
      v = _mm256_or_si256(v, s);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), v);
  }
  for (; i < n; ++i) {
    std::uint8_t v = acc[i];
    for (int d = lo; d <= hi && !v; ++d) v |= src[i + d];
    acc[i] = v;
  }
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k{and_range_avx2, or_range_avx2, "avx2"};
  return k;
}

}  // namespace adugs::masking::kernels

#endif
