#include "clusterhall/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CLUSTERHALL_HAVE_AVX2_BUILD 1
#endif

namespace clusterhall::kernels::avx2 {

#ifdef CLUSTERHALL_HAVE_AVX2_BUILD
namespace {

__attribute__((target("avx2"))) inline __m256i reduce8(__m256i x, __m256i vp, __m256i vm) {
  __m256i q = _mm256_srli_epi32(_mm256_mullo_epi32(x, vm), kReduceShift);
  return _mm256_sub_epi32(x, _mm256_mullo_epi32(q, vp));
}

__attribute__((target("avx2"))) void axpy(std::uint32_t* dst, const std::uint32_t* src,
                                          std::size_t n, std::uint32_t c, std::uint32_t p) {
  const std::uint32_t magic = reduce_magic(p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(magic));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    __m256i x = _mm256_add_epi32(a, _mm256_mullo_epi32(b, vc));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), reduce8(x, vp, vm));
  }
  for (; k < n; ++k) dst[k] = reduce_small(dst[k] + c * src[k], p, magic);
}

__attribute__((target("avx2"))) void scale(std::uint32_t* dst, std::size_t n, std::uint32_t c,
                                           std::uint32_t p) {
  const std::uint32_t magic = reduce_magic(p);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(magic));
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k),
                        reduce8(_mm256_mullo_epi32(a, vc), vp, vm));
  }
  for (; k < n; ++k) dst[k] = reduce_small(c * dst[k], p, magic);
}

__attribute__((target("avx2"))) std::uint32_t dot(const std::uint32_t* a, const std::uint32_t* b,
                                                  std::size_t n, std::uint32_t p) {
  // Products are < 2^12, so 2^16 of them per lane stay below 2^28.
  constexpr std::size_t kChunk = std::size_t{1} << 16;
  std::uint64_t total = 0;
  std::size_t k = 0;
  while (k + 8 <= n) {
    const std::size_t span = (n - k) / 8 * 8;
    const std::size_t stop = k + (span > kChunk ? kChunk : span);
    __m256i acc = _mm256_setzero_si256();
    for (; k < stop; k += 8) {
      __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
      __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
      acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(x, y));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t v : lanes) total += v;
  }
  for (; k < n; ++k) total += static_cast<std::uint64_t>(a[k]) * b[k];
  return static_cast<std::uint32_t>(total % p);
}

}  // namespace

bool compiled() { return true; }

const Table& table() {
  static const Table t{Isa::avx2, &axpy, &scale, &dot};
  return t;
}

#else

bool compiled() { return false; }
const Table& table() { return scalar::table(); }

#endif

}  // namespace clusterhall::kernels::avx2
