#include "adugs/masking/kernels.hpp"

#include "adugs/core/log.hpp"

namespace adugs::masking::kernels {

namespace {

const Kernels& select() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return avx2_kernels();
#elif defined(__aarch64__)
  return neon_kernels();
#endif
  return scalar_kernels();
}

}  // namespace

const Kernels& active_kernels() {
  static const Kernels* k = [] {
    const Kernels& sel = select();
    ADUGS_LOG_DEBUG("mask kernels: %s", sel.name);
    return &sel;
  }();
  return *k;
}

}  // namespace adugs::masking::kernels
