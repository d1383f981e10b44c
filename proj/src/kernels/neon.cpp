#include "clusterhall/kernels.hpp"

#if defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace clusterhall::kernels::neon {

#if defined(__ARM_NEON)
namespace {

inline uint32x4_t reduce4(uint32x4_t x, uint32x4_t vp, uint32x4_t vm) {
  uint32x4_t q = vshrq_n_u32(vmulq_u32(x, vm), kReduceShift);
  return vmlsq_u32(x, q, vp);
}

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
          std::uint32_t p) {
  const std::uint32_t magic = reduce_magic(p);
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x4_t vm = vdupq_n_u32(magic);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    uint32x4_t x = vmlaq_n_u32(vld1q_u32(dst + k), vld1q_u32(src + k), c);
    vst1q_u32(dst + k, reduce4(x, vp, vm));
  }
  for (; k < n; ++k) dst[k] = reduce_small(dst[k] + c * src[k], p, magic);
}

void scale(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const std::uint32_t magic = reduce_magic(p);
  const uint32x4_t vp = vdupq_n_u32(p);
  const uint32x4_t vm = vdupq_n_u32(magic);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) vst1q_u32(dst + k, reduce4(vmulq_n_u32(vld1q_u32(dst + k), c), vp, vm));
  for (; k < n; ++k) dst[k] = reduce_small(c * dst[k], p, magic);
}

std::uint32_t dot(const std::uint32_t* a, const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  constexpr std::size_t kChunk = std::size_t{1} << 16;
  std::uint64_t total = 0;
  std::size_t k = 0;
  while (k + 4 <= n) {
    const std::size_t span = (n - k) / 4 * 4;
    const std::size_t stop = k + (span > kChunk ? kChunk : span);
    uint32x4_t acc = vdupq_n_u32(0);
    for (; k < stop; k += 4) acc = vmlaq_u32(acc, vld1q_u32(a + k), vld1q_u32(b + k));
    total += vaddvq_u32(acc);
  }
  for (; k < n; ++k) total += static_cast<std::uint64_t>(a[k]) * b[k];
  return static_cast<std::uint32_t>(total % p);
}

}  // namespace

bool compiled() { return true; }

const Table& table() {
  static const Table t{Isa::neon, &axpy, &scale, &dot};
  return t;
}

#else

bool compiled() { return false; }
const Table& table() { return scalar::table(); }

#endif

}  // namespace clusterhall::kernels::neon
