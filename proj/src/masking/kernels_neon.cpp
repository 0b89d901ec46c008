#if defined(__aarch64__)

#include <arm_neon.h>

#include "adugs/masking/kernels.hpp"

namespace adugs::masking::kernels {

namespace {

void and_range_neon(std::uint8_t* acc, const std::uint8_t* src, int n,
                    int lo, int hi) {
  int i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t v = vld1q_u8(acc + i);
    for (int d = lo; d <= hi; ++d) v = vandq_u8(v, vld1q_u8(src + i + d));
    vst1q_u8(acc + i, v);
  }
  for (; i < n; ++i) {
    std::uint8_t v = acc[i];
    for (int d = lo; d <= hi && v; ++d) v &= src[i + d];
    acc[i] = v;
  }
}

void or_range_neon(std::uint8_t* acc, const std::uint8_t* src, int n,
                   int lo, int hi) {
  int i = 0;
  for (; i + 16 <= n; i += 16) {
    uint8x16_t v = vld1q_u8(acc + i);
    for (int d = lo; d <= hi; ++d) v = vorrq_u8(v, vld1q_u8(src + i + d));
    vst1q_u8(acc + i, v);
  }
  for (; i < n; ++i) {
    std::uint8_t v = acc[i];
    for (int d = lo; d <= hi && !v; ++d) v |= src[i + d];
    acc[i] = v;
  }
}

}  // namespace

const Kernels& neon_kernels() {
  static const Kernels k{and_range_neon, or_range_neon, "neon"};
  return k;
}

}  // namespace adugs::masking::kernels

#endif
