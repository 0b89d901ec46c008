#include "adugs/masking/kernels.hpp"

namespace adugs::masking::kernels {

namespace {

void and_range_scalar(std::uint8_t* acc, const std::uint8_t* src, int n,
                      int lo, int hi) {
  for (int i = 0; i < n; ++i) {
    std::uint8_t v = acc[i];
    for (int d = lo; d <= hi && v; ++d) v &= src[i + d];
    acc[i] = v;
  }
}

void or_range_scalar(std::uint8_t* acc, const std::uint8_t* src, int n,
                     int lo, int hi) {
  for (int i = 0; i < n; ++i) {
    std::uint8_t v = acc[i];
    for (int d = lo; d <= hi && !v; ++d) v |= src[i + d];
    acc[i] = v;
  }
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{and_range_scalar, or_range_scalar, "scalar"};
  return k;
}

}  // namespace adugs::masking::kernels
